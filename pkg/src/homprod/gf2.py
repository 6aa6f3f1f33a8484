"""Dense GF(2) linear algebra on bit-packed matrices.

Each matrix row is stored as a single Python integer bitset (bit ``j``
is column ``j``), which gives word-parallel XOR row operations and
popcount weights without any third-party dependency.  All values are
immutable after construction, so they can be shared freely.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterable, Sequence


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes."""


def _as_mask(vector, length: int) -> int:
    """Coerce a bit vector (int bitset or iterable of 0/1) to an int bitset."""
    if isinstance(vector, int):
        if vector < 0 or vector >> length:
            raise DimensionMismatch(f"bit vector does not fit in length {length}")
        return vector
    bits = list(vector)
    if len(bits) != length:
        raise DimensionMismatch(f"expected vector of length {length}, got {len(bits)}")
    mask = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"vector entry {b!r} is not a bit")
        mask |= b << i
    return mask


class BinMatrix:
    """Immutable dense binary matrix with bit-packed rows.

    Zero rows or zero columns are legal; the empty matrix acts as the
    trivial boundary operator and needs no special-casing downstream.
    """

    __slots__ = ("_nrows", "_ncols", "_bits")

    def __init__(self, rows: int, cols: int, bits: Sequence[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if bits is None:
            bits = (0,) * rows
        else:
            bits = tuple(bits)
        if len(bits) != rows:
            raise DimensionMismatch(f"expected {rows} row words, got {len(bits)}")
        mask = (1 << cols) - 1
        for b in bits:
            if b < 0 or b & ~mask:
                raise ValueError("row word has bits set beyond the column count")
        self._nrows = rows
        self._ncols = cols
        self._bits = bits

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "BinMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "BinMatrix":
        """Build from an iterable of 0/1 row lists.

        ``cols`` is required when there are no rows.
        """
        packed = []
        width = cols
        for row in rows:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionMismatch("ragged rows")
            packed.append(_as_mask(row, width))
        if width is None:
            raise ValueError("cannot infer column count from an empty row list")
        return cls(len(packed), width, packed)

    @classmethod
    def from_string(cls, text: str) -> "BinMatrix":
        """Parse rows of 0/1 characters separated by whitespace, e.g. ``"110 011"``."""
        rows = [[int(ch) for ch in tok] for tok in text.split()]
        return cls.from_rows(rows)

    @property
    def rows(self) -> int:
        return self._nrows

    @property
    def cols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def bits(self) -> tuple[int, ...]:
        """Row bitsets (bit ``j`` of entry ``i`` is the (i, j) matrix entry)."""
        return self._bits

    def row_bits(self, i: int) -> int:
        return self._bits[i]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self._nrows and 0 <= j < self._ncols):
            raise IndexError("matrix index out of range")
        return (self._bits[i] >> j) & 1

    def is_zero(self) -> bool:
        return not any(self._bits)

    def transpose(self) -> "BinMatrix":
        cols = [0] * self._ncols
        for i, b in enumerate(self._bits):
            while b:
                j = (b & -b).bit_length() - 1
                cols[j] |= 1 << i
                b &= b - 1
        return BinMatrix(self._ncols, self._nrows, cols)

    def __matmul__(self, other: "BinMatrix") -> "BinMatrix":
        if not isinstance(other, BinMatrix):
            return NotImplemented
        if self._ncols != other._nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        obits = other._bits
        out = []
        for b in self._bits:
            acc = 0
            while b:
                j = (b & -b).bit_length() - 1
                acc ^= obits[j]
                b &= b - 1
            out.append(acc)
        return BinMatrix(self._nrows, other._ncols, out)

    def mul_vec(self, x) -> int:
        """Matrix-vector product ``m @ x`` as an int bitset over the rows."""
        xm = _as_mask(x, self._ncols)
        y = 0
        for i, b in enumerate(self._bits):
            if (b & xm).bit_count() & 1:
                y |= 1 << i
        return y

    def row_weights(self) -> list[int]:
        return [b.bit_count() for b in self._bits]

    def col_weights(self) -> list[int]:
        w = [0] * self._ncols
        for b in self._bits:
            while b:
                j = (b & -b).bit_length() - 1
                w[j] += 1
                b &= b - 1
        return w

    def to_lists(self) -> list[list[int]]:
        return [[(b >> j) & 1 for j in range(self._ncols)] for b in self._bits]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinMatrix):
            return NotImplemented
        return self.shape == other.shape and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._bits))

    def __repr__(self) -> str:
        if self._nrows and self._ncols and self._nrows * self._ncols <= 64:
            body = " ".join(
                "".join(str((b >> j) & 1) for j in range(self._ncols))
                for b in self._bits
            )
            return f"BinMatrix({self._nrows}x{self._ncols}: {body})"
        return f"BinMatrix({self._nrows}x{self._ncols})"


def hstack(mats: Sequence[BinMatrix]) -> BinMatrix:
    """Concatenate matrices left to right (equal row counts required)."""
    if not mats:
        raise ValueError("hstack of nothing")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack requires equal row counts")
    bits = [0] * rows
    shift = 0
    for m in mats:
        for i, b in enumerate(m.bits):
            bits[i] |= b << shift
        shift += m.cols
    return BinMatrix(rows, shift, bits)


def vstack(mats: Sequence[BinMatrix]) -> BinMatrix:
    """Stack matrices top to bottom (equal column counts required)."""
    if not mats:
        raise ValueError("vstack of nothing")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack requires equal column counts")
    bits: list[int] = []
    for m in mats:
        bits.extend(m.bits)
    return BinMatrix(len(bits), cols, bits)


def kron(a: BinMatrix, b: BinMatrix) -> BinMatrix:
    """Kronecker product; block (i, j) equals ``b`` where ``a[i, j] = 1``."""
    bc = b.cols
    out = []
    for abits in a.bits:
        for bbits in b.bits:
            acc = 0
            x = abits
            while x:
                j = (x & -x).bit_length() - 1
                acc |= bbits << (j * bc)
                x &= x - 1
            out.append(acc)
    return BinMatrix(a.rows * b.rows, a.cols * b.cols, out)


def _echelon(bits: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of a list of row bitsets.

    Returns (rows, pivots) with pivot columns strictly increasing and each
    pivot column containing a single 1.  First-nonzero pivoting; over GF(2)
    there are no tie-breaking subtleties.
    """
    rows: list[int] = []
    pivots: list[int] = []
    for b in bits:
        for p, r in zip(pivots, rows):
            if (b >> p) & 1:
                b ^= r
        if not b:
            continue
        p = (b & -b).bit_length() - 1
        idx = bisect_left(pivots, p)
        pivots.insert(idx, p)
        rows.insert(idx, b)
        for i in range(len(rows)):
            if i != idx and (rows[i] >> p) & 1:
                rows[i] ^= b
    return rows, pivots


class EchelonBasis:
    """A linearly independent row set in reduced echelon form.

    Supports cheap reduction of a vector against the basis; a vector lies
    in the span iff it reduces to zero.
    """

    __slots__ = ("_ncols", "_rows", "_pivots")

    def __init__(self, ncols: int, rows: Sequence[int] = (), pivots: Sequence[int] = ()):
        self._ncols = ncols
        self._rows = tuple(rows)
        self._pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, ncols: int, bits: Iterable[int]) -> "EchelonBasis":
        rows, pivots = _echelon(bits)
        return cls(ncols, rows, pivots)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def pivot_cols(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def bits(self) -> tuple[int, ...]:
        return self._rows

    @property
    def matrix(self) -> BinMatrix:
        return BinMatrix(len(self._rows), self._ncols, self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, x: int) -> int:
        """Residual of ``x`` after eliminating all pivot positions."""
        for p, r in zip(self._pivots, self._rows):
            if (x >> p) & 1:
                x ^= r
        return x

    def __contains__(self, x: int) -> bool:
        return self.reduce(x) == 0

    def __repr__(self) -> str:
        return f"EchelonBasis(dim={len(self._rows)}, ncols={self._ncols})"


def rank(m: BinMatrix) -> int:
    """GF(2) rank; equals the rank of the transpose."""
    _, pivots = _echelon(m.bits)
    return len(pivots)


def row_space_basis(m: BinMatrix) -> EchelonBasis:
    """Echelon basis of the row space."""
    return EchelonBasis.from_rows(m.cols, m.bits)


def column_space_basis(m: BinMatrix) -> EchelonBasis:
    """Echelon basis of the column span, as row vectors of length ``m.rows``."""
    return EchelonBasis.from_rows(m.rows, m.transpose().bits)


def kernel_basis(m: BinMatrix) -> EchelonBasis:
    """Echelon basis of ``{x : m @ x = 0}``; size is ``cols - rank``."""
    rows, pivots = _echelon(m.bits)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, rows):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return EchelonBasis.from_rows(m.cols, basis)


def solve(m: BinMatrix, y) -> int | None:
    """Some ``x`` with ``m @ x = y``, or ``None`` when ``y`` is outside the column span.

    ``y`` may be an int bitset or an iterable of 0/1 of length ``m.rows``.
    """
    ym = _as_mask(y, m.rows)
    shift = m.rows
    low_mask = (1 << shift) - 1
    rows: list[int] = []
    pivots: list[int] = []
    # Eliminate the columns of m, tagging each with the combination that built it.
    for k, col in enumerate(m.transpose().bits):
        aug = col | (1 << (shift + k))
        for p, r in zip(pivots, rows):
            if (aug >> p) & 1:
                aug ^= r
        if not (aug & low_mask):
            continue
        p = ((aug & low_mask) & -(aug & low_mask)).bit_length() - 1
        idx = bisect_left(pivots, p)
        pivots.insert(idx, p)
        rows.insert(idx, aug)
        for i in range(len(rows)):
            if i != idx and (rows[i] >> p) & 1:
                rows[i] ^= aug
    residual = ym
    combo = 0
    for p, r in zip(pivots, rows):
        if (residual >> p) & 1:
            residual ^= r & low_mask
            combo ^= r >> shift
    if residual:
        return None
    return combo
