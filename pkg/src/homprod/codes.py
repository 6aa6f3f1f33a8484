"""CSS code extraction, parameter reports, and seed-matrix ensembles."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complexes import ChainComplex, LevelOutOfRange
from .distance import (
    DEFAULT_KERNEL_CAP,
    KernelTooLarge,
    homological_distance,
    nontrivial_weight_upper_bound,
)
from .extnat import ExtNat
from .gf2 import BinMatrix, rank


class InvalidSpec(ValueError):
    """Ensemble specification violates its constraints."""


@dataclass(frozen=True)
class CssCode:
    """Orthogonal generator pair acting on ``n = g_x.cols`` qubits."""

    g_x: BinMatrix
    g_z: BinMatrix
    level: int | None = None

    def __post_init__(self):
        if self.g_x.cols != self.g_z.cols:
            raise InvalidSpec("g_x and g_z must act on the same number of qubits")
        if not (self.g_x @ self.g_z.transpose()).is_zero():
            raise InvalidSpec("g_x @ g_z^T must vanish")

    @property
    def n(self) -> int:
        return self.g_x.cols


@dataclass(frozen=True)
class CodeParameters:
    """[[n, k, d]] data with per-side exactness.

    When a distance search hits its kernel cap the side is reported as the
    interval [d, d_upper] with ``exact`` false; otherwise both ends agree.
    """

    n: int
    k: int
    d_z: ExtNat
    d_x: ExtNat
    d_z_upper: ExtNat
    d_x_upper: ExtNat
    exact_z: bool
    exact_x: bool

    @property
    def d(self) -> ExtNat:
        return min(self.d_z, self.d_x)


def extract_css(c: ChainComplex, level: int) -> CssCode:
    """CSS code at a level: g_x is the boundary, g_z the transposed coboundary.

    The end levels produce empty generator blocks.
    """
    if not 0 <= level <= c.m:
        raise LevelOutOfRange(f"level {level} outside 0..{c.m}")
    return CssCode(g_x=c.boundary(level), g_z=c.boundary(level + 1).transpose(),
                   level=level)


def _side_distance(stabilizer: BinMatrix, other: BinMatrix, cap: int,
                   fallback_bounds: tuple[ExtNat, ExtNat] | None):
    """Distance of one side: min weight in Ker(stabilizer) off the row span of other."""
    side = ChainComplex((stabilizer, other.transpose()))
    try:
        result = homological_distance(side, 1, cap=cap)
        return result.value, result.value, True
    except KernelTooLarge:
        if fallback_bounds is not None:
            lower, upper = fallback_bounds
        else:
            lower = ExtNat(1)
            upper = nontrivial_weight_upper_bound(stabilizer, other.transpose())
        return lower, upper, False


def css_parameters(code: CssCode, cap: int = DEFAULT_KERNEL_CAP, *,
                   z_bounds: tuple[ExtNat, ExtNat] | None = None,
                   x_bounds: tuple[ExtNat, ExtNat] | None = None) -> CodeParameters:
    """n, k and both distances; degrades to bound intervals past the cap.

    ``z_bounds``/``x_bounds`` let callers that know tighter intervals (for
    instance from product bound formulas) substitute them on cap overflow.
    """
    k = code.n - rank(code.g_x) - rank(code.g_z)
    d_z, d_z_up, exact_z = _side_distance(code.g_x, code.g_z, cap, z_bounds)
    d_x, d_x_up, exact_x = _side_distance(code.g_z, code.g_x, cap, x_bounds)
    return CodeParameters(n=code.n, k=k, d_z=d_z, d_x=d_x,
                          d_z_upper=d_z_up, d_x_upper=d_x_up,
                          exact_z=exact_z, exact_x=exact_x)


@dataclass(frozen=True)
class EnsembleSpec:
    """Seed-matrix recipe: kind plus the parameters that kind needs.

    Kinds: ``gallager`` (regular col_weight/row_weight/cols ensemble),
    ``rep`` (circulant repetition, size L), ``id`` (identity, size n),
    ``file`` (path to an alist file).
    """

    kind: str
    col_weight: int = 0
    row_weight: int = 0
    cols: int = 0
    size: int = 0
    path: str = ""
    seed: int = 0

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> "EnsembleSpec":
        """Parse CLI syntax: ``gallager:v,w,c`` | ``rep:L`` | ``id:n`` | ``file:PATH``."""
        kind, sep, arg = text.partition(":")
        if not sep:
            raise InvalidSpec(f"malformed ensemble spec {text!r}")
        try:
            if kind == "gallager":
                v, w, c = (int(t) for t in arg.split(","))
                return cls(kind="gallager", col_weight=v, row_weight=w, cols=c, seed=seed)
            if kind == "rep":
                return cls(kind="rep", size=int(arg), seed=seed)
            if kind == "id":
                return cls(kind="id", size=int(arg), seed=seed)
            if kind == "file":
                return cls(kind="file", path=arg, seed=seed)
        except ValueError as exc:
            raise InvalidSpec(f"malformed ensemble spec {text!r}") from exc
        raise InvalidSpec(f"unknown ensemble kind {kind!r}")


def gallager_matrix(col_weight: int, row_weight: int, cols: int, seed: int = 0) -> BinMatrix:
    """Regular random matrix: col_weight strips of stacked permuted row blocks.

    Each strip partitions a fresh pseudorandom permutation of the columns
    into rows of ``row_weight``, so every column has weight ``col_weight``
    and every row weight ``row_weight``; the shape is (cols * col_weight /
    row_weight) x cols.  Reproducible: the permutations are drawn
    sequentially from one Mersenne Twister stream seeded with ``seed``.
    """
    if col_weight <= 0 or row_weight <= 0 or cols <= 0:
        raise InvalidSpec("gallager parameters must be positive")
    if cols % row_weight:
        raise InvalidSpec("row weight must divide the column count")
    strip_rows = cols // row_weight
    rng = random.Random(seed)
    bits = []
    for _ in range(col_weight):
        perm = list(range(cols))
        rng.shuffle(perm)
        for t in range(strip_rows):
            row = 0
            for col in perm[t * row_weight:(t + 1) * row_weight]:
                row |= 1 << col
            bits.append(row)
    return BinMatrix(col_weight * strip_rows, cols, bits)


def repetition_circulant(size: int) -> BinMatrix:
    """L x L circulant with ones at (i, i) and (i, i+1 mod L)."""
    if size <= 0:
        raise InvalidSpec("circulant size must be positive")
    bits = [(1 << i) | (1 << ((i + 1) % size)) for i in range(size)]
    return BinMatrix(size, size, bits)


def repetition_parity(size: int) -> BinMatrix:
    """(L-1) x L full-row-rank repetition parity check: ones at (i, i), (i, i+1)."""
    if size <= 1:
        raise InvalidSpec("repetition length must be at least 2")
    bits = [(1 << i) | (1 << (i + 1)) for i in range(size - 1)]
    return BinMatrix(size - 1, size, bits)


def generate_matrix(spec: EnsembleSpec) -> BinMatrix:
    """Materialize a seed matrix; deterministic given the spec and its seed."""
    if spec.kind == "gallager":
        return gallager_matrix(spec.col_weight, spec.row_weight, spec.cols, spec.seed)
    if spec.kind == "rep":
        return repetition_circulant(spec.size)
    if spec.kind == "id":
        if spec.size <= 0:
            raise InvalidSpec("identity size must be positive")
        return BinMatrix.identity(spec.size)
    if spec.kind == "file":
        from .alist import read_alist

        return read_alist(spec.path)
    raise InvalidSpec(f"unknown ensemble kind {spec.kind!r}")


def sparsity(m: BinMatrix) -> tuple[int, int]:
    """(max column weight, max row weight); (0, 0) for zero or empty matrices."""
    return (max(m.col_weights(), default=0), max(m.row_weights(), default=0))
