"""Test-local GF(2) helpers, independent of the library's implementations.

Everything here works on plain lists of int bitsets and uses its own
elimination, so oracle results never share a code path with the engines
they check.
"""

from __future__ import annotations

import random

from homprod import BinMatrix, ChainComplex, one_complex, tensor_product


# --- independent linear algebra -------------------------------------------

def ref_echelon(rows):
    """Forward-and-back elimination; returns (rows, pivots) sorted by pivot."""
    basis = []
    for b in rows:
        for p, r in basis:
            if (b >> p) & 1:
                b ^= r
        if b:
            p = (b & -b).bit_length() - 1
            for i, (q, r) in enumerate(basis):
                if (r >> p) & 1:
                    basis[i] = (q, r ^ b)
            basis.append((p, b))
            basis.sort()
    return [r for _, r in basis], [p for p, _ in basis]


def ref_rank(rows):
    return len(ref_echelon(rows)[1])


def ref_reduce(basis, x):
    rows, pivots = basis
    for p, r in zip(pivots, rows):
        if (x >> p) & 1:
            x ^= r
    return x


def columns_as_masks(rows, ncols=None):
    """Column vectors of a row-bitset matrix, as bitsets over the rows.

    Trailing all-zero columns are dropped unless ``ncols`` is given; for
    kernel computations a zero column is a vacuous constraint anyway.
    """
    if ncols is None:
        ncols = max((b.bit_length() for b in rows), default=0)
    cols = [0] * ncols
    for i, b in enumerate(rows):
        while b:
            j = (b & -b).bit_length() - 1
            cols[j] |= 1 << i
            b &= b - 1
    return cols


def mat_columns(m: BinMatrix):
    """Columns of a BinMatrix as masks over its rows (local scatter, no transpose)."""
    cols = [0] * m.cols
    for i in range(m.rows):
        b = m.row_bits(i)
        while b:
            j = (b & -b).bit_length() - 1
            cols[j] |= 1 << i
            b &= b - 1
    return cols


def naive_distance(parity_rows, n, image_cols):
    """Min weight over all 2**n vectors that are cycles but not boundaries.

    ``parity_rows``: row bitsets of A_j; ``image_cols``: column masks of
    A_{j+1} (vectors in the level space).  Returns None for an empty set.
    """
    image = ref_echelon(image_cols)
    best = None
    for x in range(1, 1 << n):
        if any((row & x).bit_count() & 1 for row in parity_rows):
            continue
        if ref_reduce(image, x) == 0:
            continue
        w = x.bit_count()
        if best is None or w < best:
            best = w
    return best


def naive_level_distance(cx: ChainComplex, j: int):
    """Naive oracle applied to a complex level (use only for small n_j)."""
    parity = [cx.boundary(j).row_bits(i) for i in range(cx.boundary(j).rows)]
    image_cols = mat_columns(cx.boundary(j + 1))
    return naive_distance(parity, cx.dim(j), image_cols)


# --- random instances -------------------------------------------------------

def random_matrix(rng: random.Random, rows, cols, density=0.5):
    bits = []
    for _ in range(rows):
        b = 0
        for j in range(cols):
            if rng.random() < density:
                b |= 1 << j
        bits.append(b)
    return BinMatrix(rows, cols, bits)


def random_sparse(rng: random.Random, rows, cols, col_weight=2, row_weight=3):
    """Random matrix with column weights <= col_weight and row weights <= row_weight."""
    row_fill = [0] * rows
    bits = [0] * rows
    for j in range(cols):
        w = rng.randint(0, min(col_weight, rows))
        candidates = [i for i in range(rows) if row_fill[i] < row_weight]
        rng.shuffle(candidates)
        for i in candidates[:w]:
            bits[i] |= 1 << j
            row_fill[i] += 1
    return BinMatrix(rows, cols, bits)


def random_full_row_rank(rng: random.Random, rows, cols, density=0.5):
    """Random full-row-rank matrix with rows < cols (draws until rank hits rows)."""
    assert rows < cols
    while True:
        m = random_matrix(rng, rows, cols, density)
        if ref_rank(list(m.bits)) == rows:
            return m


def random_rank_deficient(rng: random.Random, rows, cols, density=0.5):
    """Random matrix whose rank is strictly below its row count."""
    while True:
        m = random_matrix(rng, rows, cols, density)
        if 0 < ref_rank(list(m.bits)) < rows:
            return m


def random_complex(rng: random.Random, m=2, max_dim=8, density=0.5) -> ChainComplex:
    """Random valid complex built by chaining kernels from right to left.

    Picks A_m at random, then repeatedly draws rows from the left-kernel of
    the previous matrix, so consecutive products always vanish.
    """
    n_right = rng.randint(1, max_dim)
    n_left = rng.randint(1, max_dim)
    boundaries = [random_matrix(rng, n_left, n_right, density)]
    for _ in range(m - 1):
        right = boundaries[0]
        # Rows orthogonal to all columns of `right` form the span of this basis.
        kernel_rows, _ = ref_echelon(
            _kernel_of_columns(list(right.bits), right.rows))
        n_new = rng.randint(1, max_dim)
        bits = []
        for _ in range(n_new):
            b = 0
            for r in kernel_rows:
                if rng.random() < 0.5:
                    b ^= r
            bits.append(b)
        boundaries.insert(0, BinMatrix(n_new, right.rows, bits))
    return ChainComplex(boundaries)


def _kernel_of_columns(rows, nrows):
    """Basis of {x : x @ M = 0} for a row-bitset matrix M with nrows rows."""
    cols = columns_as_masks(rows)
    # Solve M^T x = 0 by eliminating the columns (now rows of M^T).
    reduced, pivots = ref_echelon(cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(nrows):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, r in zip(pivots, reduced):
            if (r >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def random_product_complex(rng: random.Random, n_factors=2, max_dim=3) -> ChainComplex:
    """Product of random sparse two-space complexes."""
    factors = []
    for _ in range(n_factors):
        r = rng.randint(1, max_dim)
        c = rng.randint(1, max_dim + 1)
        factors.append(one_complex(random_sparse(rng, r, c, 2, 3)))
    cx = factors[0]
    for f in factors[1:]:
        cx = tensor_product(cx, f)
    return cx
