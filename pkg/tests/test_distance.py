"""Exact distance engines against naive enumeration and known families."""

from __future__ import annotations

import random

import pytest

from homprod import (
    BinMatrix,
    ChainComplex,
    INFINITY,
    KernelTooLarge,
    classical_distance,
    cohomological_distance,
    homological_distance,
    kernel_basis,
    one_complex,
    power_complex,
    rank,
    repetition_circulant,
)
from helpers import naive_level_distance, random_complex, random_matrix


def toric_lattice_complex(L: int) -> ChainComplex:
    """Vertices-edges-faces complex of an L x L torus, built from adjacency.

    Independent of the tensor-product constructions: boundary entries come
    straight from lattice incidence.
    """
    def v(r, c):
        return (r % L) * L + (c % L)

    def h(r, c):
        return (r % L) * L + (c % L)          # horizontal edges: 0..L^2-1

    def t(r, c):
        return L * L + (r % L) * L + (c % L)  # vertical edges: L^2..2L^2-1

    edges = 2 * L * L
    a1 = [[0] * edges for _ in range(L * L)]
    for r in range(L):
        for c in range(L):
            a1[v(r, c)][h(r, c)] ^= 1
            a1[v(r, c + 1)][h(r, c)] ^= 1
            a1[v(r, c)][t(r, c)] ^= 1
            a1[v(r + 1, c)][t(r, c)] ^= 1
    a2 = [[0] * (L * L) for _ in range(edges)]
    for r in range(L):
        for c in range(L):
            f = r * L + c
            a2[h(r, c)][f] ^= 1
            a2[h(r + 1, c)][f] ^= 1
            a2[t(r, c)][f] ^= 1
            a2[t(r, c + 1)][f] ^= 1
    return ChainComplex([BinMatrix.from_rows(a1), BinMatrix.from_rows(a2)])


def test_level0_is_one_without_full_row_rank():
    # A_1 = [1 1; 1 1] has rank 1 < 2 rows, so some unit vector is nontrivial.
    cx = one_complex(BinMatrix.from_string("11 11"))
    result = homological_distance(cx, 0)
    assert result.value == 1
    assert result.witness is not None and result.witness.bit_count() == 1
    assert result.enumerated == 0


def test_level0_infinite_at_full_row_rank():
    cx = one_complex(BinMatrix.from_string("110 011"))
    assert homological_distance(cx, 0).value == INFINITY


def test_top_level_equals_classical_distance():
    rng = random.Random(300)
    for _ in range(20):
        cx = random_complex(rng, m=rng.randint(1, 3), max_dim=8)
        top = homological_distance(cx, cx.m).value
        assert top == classical_distance(cx.boundary(cx.m))


def test_toric_l3_distance_and_witness():
    cx = power_complex(repetition_circulant(3), 1, 1)
    assert cx.dims == (9, 18, 9)
    assert cx.homology_rank(1) == 2
    result = homological_distance(cx, 1)
    assert result.value == 3
    assert result.witness.bit_count() == 3
    assert cx.boundary(1).mul_vec(result.witness) == 0
    # Full walk over the kernel: dimension is 18 - rank(A_1).
    dim = 18 - rank(cx.boundary(1))
    assert dim == 10
    assert result.enumerated == 2 ** dim - 1


def test_toric_lattice_matches_product_construction():
    for L in (2, 3):
        lattice = toric_lattice_complex(L)
        product = power_complex(repetition_circulant(L), 1, 1)
        assert lattice.dims == product.dims
        assert lattice.homology_ranks() == product.homology_ranks()
        for j in range(3):
            d_lat = homological_distance(lattice, j).value
            d_prod = homological_distance(product, j).value
            assert d_lat == d_prod


def test_naive_oracle_toric_l2():
    cx = toric_lattice_complex(2)
    assert naive_level_distance(cx, 1) == 2
    assert homological_distance(cx, 1).value == 2


def test_cohomological_distance_five_qubit_block():
    cx = power_complex(BinMatrix.from_string("11"), 1, 1)
    assert cohomological_distance(cx, 1).value == 2


def test_cohomology_mirrors_transposed_complex():
    rng = random.Random(301)
    for _ in range(10):
        cx = random_complex(rng, m=2, max_dim=5)
        co = cx.cochain()
        for j in range(cx.m + 1):
            lhs = cohomological_distance(cx, j).value
            rhs = homological_distance(co, cx.m - j).value
            assert lhs == rhs


def test_trivial_group_is_infinite():
    cx = one_complex(BinMatrix.identity(3))
    assert homological_distance(cx, 1).value == INFINITY
    assert cohomological_distance(cx, 0).value == INFINITY


def test_classical_distance_examples():
    assert classical_distance(BinMatrix.from_string("11")) == 2
    assert classical_distance(BinMatrix.identity(4)) == INFINITY
    # Parity check whose columns run through all nonzero 3-bit patterns.
    hamming = BinMatrix.from_rows([
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ])
    assert classical_distance(hamming) == 3


def test_classical_matches_one_complex_level_one():
    rng = random.Random(302)
    for _ in range(25):
        p = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 10))
        expected = homological_distance(one_complex(p), 1).value
        assert classical_distance(p) == expected


def test_engine_matches_naive_oracle():
    rng = random.Random(303)
    checked = 0
    while checked < 30:
        cx = random_complex(rng, m=2, max_dim=6)
        for j in range(3):
            if cx.dim(j) > 12:
                continue
            expected = naive_level_distance(cx, j)
            got = homological_distance(cx, j).value
            if expected is None:
                assert got == INFINITY
            else:
                assert got == expected
            checked += 1


def test_enumerated_counts_full_walk():
    rng = random.Random(304)
    for _ in range(10):
        cx = random_complex(rng, m=2, max_dim=5)
        j = 1
        if cx.homology_rank(j) == 0:
            continue
        dim = len(kernel_basis(cx.boundary(j)))
        if dim == cx.dim(j):
            continue  # weight-1 fast path does not walk
        result = homological_distance(cx, j)
        assert result.enumerated == 2 ** dim - 1


def test_kernel_cap():
    cx = one_complex(BinMatrix.from_string("1111111"))
    # Single parity row over 7 bits: kernel dimension 6.
    with pytest.raises(KernelTooLarge) as err:
        homological_distance(cx, 1, cap=5)
    assert err.value.dim == 6
    assert homological_distance(cx, 1, cap=6).value == 2


def test_zero_parity_fast_path_ignores_cap():
    # Rank-0 boundary: every vector is a cycle, a unit vector suffices and
    # no enumeration is attempted regardless of the cap.
    cx = one_complex(BinMatrix.zeros(1, 40))
    result = homological_distance(cx, 1, cap=4)
    assert result.value == 1
    assert result.enumerated == 0


def test_lower_bound_early_exit():
    cx = power_complex(repetition_circulant(3), 1, 1)
    full = homological_distance(cx, 1)
    early = homological_distance(cx, 1, lower_bound=3)
    assert early.value == full.value == 3
    assert early.enumerated <= full.enumerated


def test_witness_is_nontrivial_cycle():
    rng = random.Random(305)
    for _ in range(15):
        cx = random_complex(rng, m=2, max_dim=6)
        for j in range(3):
            result = homological_distance(cx, j)
            if not result.value.is_finite:
                assert result.witness is None
                continue
            w = result.witness
            assert cx.boundary(j).mul_vec(w) == 0
            assert w.bit_count() == result.value.finite_value
            # Not a boundary: appending w to the columns must raise the rank.
            cols = cx.boundary(j + 1).transpose()
            stacked = BinMatrix(cols.rows + 1, cols.cols, list(cols.bits) + [w])
            assert rank(stacked) == rank(cols) + 1


def test_parallel_search_matches_serial():
    cx = power_complex(repetition_circulant(3), 1, 1)
    serial = homological_distance(cx, 1)
    parallel = homological_distance(cx, 1, workers=2)
    assert parallel.value == serial.value == 3
    assert parallel.enumerated == serial.enumerated == 2 ** 10 - 1
    assert parallel.witness.bit_count() == 3
