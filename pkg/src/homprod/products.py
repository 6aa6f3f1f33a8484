"""Tensor products of chain complexes and their parameter formulas.

The level-l space of a product decomposes as a direct sum of Kronecker
blocks A_i (x) B_{l-i}; blocks are always ordered by increasing i, which
fixes the basis order the construction leaves open.  Sign factors play no
role over GF(2) and are dropped throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from collections.abc import Sequence

from .complexes import ChainComplex, one_complex
from .distance import DEFAULT_KERNEL_CAP, classical_distance
from .extnat import ExtNat, INFINITY, as_extnat, min_or_infinity
from .gf2 import BinMatrix, hstack, kron, rank, vstack


class InvalidExponents(ValueError):
    """Power construction needs at least one factor."""


@dataclass(frozen=True)
class ProductLayout:
    """Block decomposition of one product level.

    ``blocks`` lists (i, j, width) with i + j = level, ordered by
    increasing i; widths sum to the product dimension at this level.
    """

    level: int
    blocks: tuple[tuple[int, int, int], ...]

    @property
    def width(self) -> int:
        return sum(b[2] for b in self.blocks)


@dataclass(frozen=True)
class DistanceBounds:
    """Lower/upper distance bounds with an optional exact prediction."""

    lower: ExtNat
    upper: ExtNat
    exact_prediction: ExtNat | None = None

    def __post_init__(self):
        if self.upper < self.lower:
            raise ValueError(f"bounds out of order: {self.lower} > {self.upper}")
        if self.exact_prediction is not None and not \
                self.lower <= self.exact_prediction <= self.upper:
            raise ValueError(
                f"prediction {self.exact_prediction} outside "
                f"[{self.lower}, {self.upper}]")


def _block_indices(a: ChainComplex, b: ChainComplex, level: int) -> list[tuple[int, int]]:
    lo = max(0, level - b.m)
    hi = min(a.m, level)
    return [(i, level - i) for i in range(lo, hi + 1)]


def product_layout(a: ChainComplex, b: ChainComplex, level: int) -> ProductLayout:
    blocks = tuple((i, j, a.dim(i) * b.dim(j)) for i, j in _block_indices(a, b, level))
    return ProductLayout(level, blocks)


def product_dimensions(a: ChainComplex, b: ChainComplex, level: int) -> int:
    """Dimension of the product at ``level``: sum of n_i(a) * n_{level-i}(b)."""
    if not 0 <= level <= a.m + b.m:
        return 0
    return sum(a.dim(i) * b.dim(j) for i, j in _block_indices(a, b, level))


def kunneth_ranks(a: ChainComplex, b: ChainComplex, level: int) -> int:
    """Homology rank of the product: sum of k_i(a) * k_{level-i}(b)."""
    if not 0 <= level <= a.m + b.m:
        return 0
    return sum(a.homology_rank(i) * b.homology_rank(j)
               for i, j in _block_indices(a, b, level))


def tensor_product(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Product complex of length ``a.m + b.m``.

    The boundary acts block-wise as (boundary of a) (x) identity plus
    identity (x) (boundary of b); the result always validates.
    """
    boundaries = []
    for level in range(1, a.m + b.m + 1):
        col_blocks = _block_indices(a, b, level)
        row_blocks = _block_indices(a, b, level - 1)
        rows = []
        for i2, j2 in row_blocks:
            height = a.dim(i2) * b.dim(j2)
            strip = []
            for i, j in col_blocks:
                if i == i2 + 1:
                    strip.append(kron(a.boundary(i), BinMatrix.identity(b.dim(j))))
                elif i == i2:
                    strip.append(kron(BinMatrix.identity(a.dim(i)), b.boundary(j2 + 1)))
                else:
                    strip.append(BinMatrix.zeros(height, a.dim(i) * b.dim(j)))
            rows.append(hstack(strip))
        boundaries.append(vstack(rows))
    return ChainComplex(boundaries)


def one_complex_product(a: ChainComplex, p: BinMatrix) -> ChainComplex:
    """Product with the two-space complex of ``p``, assembled block by block.

    Boundary l of the result is, in block form,

        [ A_{l-1} (x) E_c          0        ]
        [ E_{n_{l-1}} (x) P   A_l (x) E_r   ]

    with the top block row absent at l = 1 and the right block column
    absent at l = m + 1.  Bit-identical to ``tensor_product(a, one_complex(p))``.
    """
    r, c = p.rows, p.cols
    boundaries = []
    for level in range(1, a.m + 2):
        top = None
        if level >= 2:
            left = kron(a.boundary(level - 1), BinMatrix.identity(c))
            if level <= a.m:
                top = hstack([left, BinMatrix.zeros(left.rows, a.dim(level) * r)])
            else:
                top = left
        bottom_left = kron(BinMatrix.identity(a.dim(level - 1)), p)
        if level <= a.m:
            bottom = hstack([bottom_left, kron(a.boundary(level), BinMatrix.identity(r))])
        else:
            bottom = bottom_left
        boundaries.append(bottom if top is None else vstack([top, bottom]))
    return ChainComplex(boundaries)


def power_complex(p: BinMatrix, a: int, b: int) -> ChainComplex:
    """Left-fold product of ``a`` copies of K(p) and ``b`` copies of K(p^T).

    The interesting case is a full-row-rank p with fewer rows than
    columns: the result then has a single level (level ``a``) with nonzero
    homology rank.
    """
    if a < 0 or b < 0 or a + b < 1:
        raise InvalidExponents(f"need a + b >= 1 nonnegative factors, got a={a}, b={b}")
    factors = [one_complex(p)] * a + [one_complex(p.transpose())] * b
    return reduce(tensor_product, factors)


def _at(distances: Sequence, i: int) -> ExtNat:
    if 0 <= i < len(distances):
        return as_extnat(distances[i])
    return INFINITY


def distance_upper_bound(d_a: Sequence, d_b: Sequence, level: int) -> ExtNat:
    """Min over i of d_i(a) * d_{level-i}(b); infinite when no term is finite."""
    terms = (_at(d_a, i) * _at(d_b, level - i) for i in range(level + 1))
    return min_or_infinity(terms)


def distance_lower_bound(d_a: Sequence, p: BinMatrix, level: int, *,
                         cap: int = DEFAULT_KERNEL_CAP) -> ExtNat:
    """Lower bound on the product distance when the second factor is K(p).

    With u the rank of p and delta the distance of the code with parity
    check p (infinite at full column rank): min(d_level, d_{level-1} * delta)
    when p has more rows than rank, else d_{level-1} * delta.
    """
    u = rank(p)
    delta = classical_distance(p, cap)
    tail = _at(d_a, level - 1) * delta
    if p.rows > u:
        return min_or_infinity((_at(d_a, level), tail))
    return tail


def predicted_distance(d_a: Sequence, p: BinMatrix, level: int, *,
                       cap: int = DEFAULT_KERNEL_CAP) -> ExtNat:
    """Exact distance of a product with K(p) in terms of factor distances.

    min(d_{level-1}(a) * d_1(K(p)), d_level(a) * d_0(K(p))) where
    d_0(K(p)) is 1 unless p has full row rank (then infinite) and
    d_1(K(p)) is the classical distance under parity check p.  Coincides
    with both the upper and the lower bound for such products.
    """
    u = rank(p)
    d0 = ExtNat(1) if p.rows > u else INFINITY
    d1 = classical_distance(p, cap)
    return min_or_infinity((_at(d_a, level - 1) * d1, _at(d_a, level) * d0))
