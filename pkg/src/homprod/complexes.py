"""Based chain complexes over GF(2).

A complex of length m is an ordered list of boundary matrices
``A_1, ..., A_m`` with ``A_j.cols == A_{j+1}.rows`` and every consecutive
product ``A_j @ A_{j+1}`` zero.  Levels run 0..m; the trivial boundary
operators at the two ends are materialized as empty matrices so that rank
and homology formulas need no branches.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .gf2 import BinMatrix, DimensionMismatch, rank


class NotOrthogonal(ValueError):
    """Consecutive boundary matrices do not compose to zero."""

    def __init__(self, level: int):
        super().__init__(f"boundary product A_{level - 1} @ A_{level} is nonzero")
        self.level = level


class LevelOutOfRange(IndexError):
    """Requested level is outside 0..m."""


class IndexOutOfRange(IndexError):
    """Column index set violates its ambient bounds or ordering."""


class ChainComplex:
    """Validated chain complex; immutable after construction."""

    __slots__ = ("_boundaries", "_dims", "_ranks")

    def __init__(self, boundaries: Sequence[BinMatrix]):
        boundaries = tuple(boundaries)
        if not boundaries:
            raise ValueError("a complex needs at least one boundary matrix")
        for j in range(1, len(boundaries)):
            left, right = boundaries[j - 1], boundaries[j]
            if left.cols != right.rows:
                raise DimensionMismatch(
                    f"A_{j} has {left.cols} columns but A_{j + 1} has {right.rows} rows"
                )
            if not (left @ right).is_zero():
                raise NotOrthogonal(j + 1)
        self._boundaries = boundaries
        self._dims = (boundaries[0].rows,) + tuple(b.cols for b in boundaries)
        self._ranks: dict[int, int] = {}

    @property
    def m(self) -> int:
        """Number of boundary matrices."""
        return len(self._boundaries)

    @property
    def boundaries(self) -> tuple[BinMatrix, ...]:
        return self._boundaries

    @property
    def dims(self) -> tuple[int, ...]:
        """Space dimensions ``(n_0, ..., n_m)``."""
        return self._dims

    def dim(self, j: int) -> int:
        if not 0 <= j <= self.m:
            raise LevelOutOfRange(f"level {j} outside 0..{self.m}")
        return self._dims[j]

    def boundary(self, j: int) -> BinMatrix:
        """Boundary operator mapping level j to level j-1.

        ``j = 0`` and ``j = m + 1`` return the trivial empty operators.
        """
        if j == 0:
            return BinMatrix.zeros(0, self._dims[0])
        if j == self.m + 1:
            return BinMatrix.zeros(self._dims[self.m], 0)
        if not 1 <= j <= self.m:
            raise LevelOutOfRange(f"boundary index {j} outside 0..{self.m + 1}")
        return self._boundaries[j - 1]

    def boundary_rank(self, j: int) -> int:
        """Cached rank of ``boundary(j)``; the trivial end operators have rank 0."""
        if j == 0 or j == self.m + 1:
            return 0
        if j not in self._ranks:
            self._ranks[j] = rank(self.boundary(j))
        return self._ranks[j]

    def homology_rank(self, j: int) -> int:
        """Rank ``k_j = n_j - rank A_j - rank A_{j+1}`` of the level-j homology group."""
        if not 0 <= j <= self.m:
            raise LevelOutOfRange(f"level {j} outside 0..{self.m}")
        return self._dims[j] - self.boundary_rank(j) - self.boundary_rank(j + 1)

    def homology_ranks(self) -> tuple[int, ...]:
        return tuple(self.homology_rank(j) for j in range(self.m + 1))

    def cochain(self) -> "ChainComplex":
        """Transposed boundaries in reverse order; level j maps to level m - j."""
        return ChainComplex(tuple(b.transpose() for b in reversed(self._boundaries)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._boundaries == other._boundaries

    def __hash__(self) -> int:
        return hash(self._boundaries)

    def __repr__(self) -> str:
        return f"ChainComplex(m={self.m}, dims={self._dims})"


def validate(boundaries: Sequence[BinMatrix]) -> ChainComplex:
    """Build a complex, raising DimensionMismatch or NotOrthogonal on failure."""
    return ChainComplex(boundaries)


def one_complex(p: BinMatrix) -> ChainComplex:
    """The two-space complex defined by a single matrix."""
    return ChainComplex((p,))


def _checked_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    idx = tuple(indices)
    prev = -1
    for i in idx:
        if not isinstance(i, int) or i <= prev:
            raise IndexOutOfRange("index set must be strictly increasing integers")
        if i >= n:
            raise IndexOutOfRange(f"index {i} outside ambient length {n}")
        prev = i
    return idx


def puncture(g: BinMatrix, indices: Iterable[int]) -> BinMatrix:
    """Keep only the listed columns.

    Applied to a generator matrix, the result generates the code with all
    other coordinates dropped.
    """
    idx = _checked_indices(indices, g.cols)
    bits = []
    for b in g.bits:
        nb = 0
        for k, c in enumerate(idx):
            nb |= ((b >> c) & 1) << k
        bits.append(nb)
    return BinMatrix(g.rows, len(idx), bits)


def shorten_parity(p: BinMatrix, indices: Iterable[int]) -> BinMatrix:
    """Column restriction of a parity check matrix.

    The result is the parity check of the shortened code: codewords
    supported inside the index set, restricted to it.
    """
    return puncture(p, indices)
