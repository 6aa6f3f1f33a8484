"""Complex validation, homology ranks, cochains, puncture/shorten."""

from __future__ import annotations

import random

import pytest

from homprod import (
    BinMatrix,
    ChainComplex,
    DimensionMismatch,
    ExtNat,
    INFINITY,
    IndexOutOfRange,
    LevelOutOfRange,
    NotOrthogonal,
    kernel_basis,
    min_or_infinity,
    one_complex,
    puncture,
    shorten_parity,
    validate,
)
from helpers import random_complex, random_matrix, ref_rank


def test_validate_single_matrix():
    cx = validate([BinMatrix.from_string("10 01 11")])
    assert cx.m == 1
    assert cx.dims == (3, 2)


def test_validate_orthogonal_pair():
    cx = validate([BinMatrix.from_string("11"), BinMatrix.from_rows([[1], [1]])])
    assert cx.m == 2
    assert cx.dims == (1, 2, 1)


def test_validate_rejects_nonorthogonal():
    with pytest.raises(NotOrthogonal) as err:
        validate([BinMatrix.from_string("11"), BinMatrix.from_rows([[1], [0]])])
    assert err.value.level == 2


def test_validate_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        validate([BinMatrix.from_string("11"), BinMatrix.identity(3)])


def test_homology_ranks_repetition():
    cx = one_complex(BinMatrix.from_string("11"))
    assert cx.homology_rank(0) == 0
    assert cx.homology_rank(1) == 1


def test_homology_ranks_zero_boundaries():
    cx = ChainComplex([BinMatrix.zeros(3, 4), BinMatrix.zeros(4, 2)])
    assert cx.homology_ranks() == (3, 4, 2)


def test_homology_rank_level_out_of_range():
    cx = one_complex(BinMatrix.from_string("11"))
    with pytest.raises(LevelOutOfRange):
        cx.homology_rank(2)


def test_cochain_involution():
    rng = random.Random(200)
    for _ in range(10):
        cx = random_complex(rng, m=rng.randint(1, 3), max_dim=6)
        assert cx.cochain().cochain() == cx


def test_cochain_of_one_complex_transposes():
    p = BinMatrix.from_string("110 011")
    assert one_complex(p).cochain() == one_complex(p.transpose())


def test_cochain_preserves_ranks():
    rng = random.Random(201)
    for _ in range(15):
        cx = random_complex(rng, m=rng.randint(1, 3), max_dim=6)
        co = cx.cochain()
        for j in range(cx.m + 1):
            assert co.homology_rank(cx.m - j) == cx.homology_rank(j)


def test_euler_telescoping():
    # Summing the rank formula over levels cancels each boundary rank twice.
    rng = random.Random(202)
    for _ in range(15):
        cx = random_complex(rng, m=rng.randint(1, 3), max_dim=6)
        total_k = sum(cx.homology_ranks())
        total_rank = sum(cx.boundary_rank(j) for j in range(1, cx.m + 1))
        assert total_k == sum(cx.dims) - 2 * total_rank


def test_boundaries_are_cycles():
    rng = random.Random(203)
    for _ in range(15):
        cx = random_complex(rng, m=rng.randint(1, 3), max_dim=6)
        for j in range(1, cx.m):
            a_j, a_next = cx.boundary(j), cx.boundary(j + 1)
            for col in a_next.transpose().bits:
                assert a_j.mul_vec(col) == 0


def test_puncture_all_columns():
    g = BinMatrix.from_string("101 110")
    assert puncture(g, range(3)) == g


def test_puncture_selected_columns():
    assert puncture(BinMatrix.from_string("101"), [0, 2]) == BinMatrix.from_string("11")


def test_puncture_empty_set():
    out = puncture(BinMatrix.from_string("101"), [])
    assert out.shape == (1, 0)


def test_puncture_rejects_bad_indices():
    g = BinMatrix.from_string("101")
    with pytest.raises(IndexOutOfRange):
        puncture(g, [0, 3])
    with pytest.raises(IndexOutOfRange):
        puncture(g, [2, 0])


def test_shorten_parity_examples():
    p = BinMatrix.from_string("110 011")
    assert shorten_parity(p, range(3)) == p
    assert shorten_parity(p, [0, 1]) == BinMatrix.from_string("11 01")


def test_shorten_repetition_becomes_trivial():
    # The restricted parity check has full column rank: only the zero word.
    restricted = shorten_parity(BinMatrix.from_string("110 011"), [0, 1])
    assert len(kernel_basis(restricted)) == 0


def test_shorten_puncture_duality():
    # Codewords supported inside the index set, restricted to it, are
    # exactly the kernel of the restricted parity check (enumerated).
    rng = random.Random(204)
    for _ in range(20):
        n = rng.randint(2, 12)
        p = random_matrix(rng, rng.randint(1, n), n)
        keep = sorted(rng.sample(range(n), rng.randint(1, n)))
        outside = [i for i in range(n) if i not in keep]
        outside_mask = sum(1 << i for i in outside)
        supported = set()
        for x in range(1 << n):
            if x & outside_mask:
                continue
            if p.mul_vec(x):
                continue
            supported.add(sum(((x >> c) & 1) << i for i, c in enumerate(keep)))
        restricted = shorten_parity(p, keep)
        kernel_words = set()
        basis = kernel_basis(restricted)
        for combo in range(1 << len(basis)):
            x = 0
            for i, b in enumerate(basis.bits):
                if (combo >> i) & 1:
                    x ^= b
            kernel_words.add(x)
        assert supported == kernel_words


def test_extnat_arithmetic():
    assert ExtNat(2) * ExtNat(3) == ExtNat(6)
    assert ExtNat(2) * INFINITY == INFINITY
    assert INFINITY * INFINITY == INFINITY
    assert min(ExtNat(4), INFINITY) == ExtNat(4)
    assert min_or_infinity([]) == INFINITY
    assert min_or_infinity([INFINITY, ExtNat(7), 9]) == ExtNat(7)
    assert ExtNat(3) < INFINITY
    assert not (INFINITY < INFINITY)
    assert ExtNat(5) == 5
    assert str(INFINITY) == "inf"
    assert ExtNat.parse("inf") == INFINITY
    assert ExtNat.parse("12") == ExtNat(12)
    with pytest.raises(ValueError):
        ExtNat(-1)
    with pytest.raises(ValueError):
        INFINITY.finite_value


def test_random_complexes_validate():
    rng = random.Random(205)
    for _ in range(20):
        cx = random_complex(rng, m=rng.randint(1, 4), max_dim=7)
        # Construction validated; double-check ranks against the reference.
        for j in range(1, cx.m + 1):
            assert cx.boundary_rank(j) == ref_rank(list(cx.boundary(j).bits))


def test_empty_level_convention():
    # A zero-dimensional space has trivial homology and infinite distance.
    from homprod import homological_distance

    cx = ChainComplex([BinMatrix.zeros(2, 0), BinMatrix.zeros(0, 3)])
    assert cx.dims == (2, 0, 3)
    assert cx.homology_rank(1) == 0
    assert homological_distance(cx, 1).value == INFINITY
