"""Exact minimum-distance engines.

The homological distance at level j is the minimum Hamming weight over
cycles (kernel vectors of A_j) that are not boundaries (outside the column
span of A_{j+1}).  The engine walks the whole kernel with a Gray code, one
basis flip per step, and tests boundary membership only for candidates
that would improve the current minimum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .complexes import ChainComplex, LevelOutOfRange
from .extnat import INFINITY, ExtNat, as_extnat
from .gf2 import BinMatrix, EchelonBasis, column_space_basis, kernel_basis

DEFAULT_KERNEL_CAP = 28


class KernelTooLarge(RuntimeError):
    """Kernel dimension exceeds the enumeration cap; fall back to bounds."""

    def __init__(self, dim: int, cap: int):
        super().__init__(f"kernel dimension {dim} exceeds cap {cap}")
        self.dim = dim
        self.cap = cap


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of an exact search.

    ``witness`` is an int bitset over the level space (None when the value
    is infinite); ``enumerated`` counts kernel vectors visited, which is
    ``2**dim - 1`` for a full walk and 0 for the weight-1 fast path.
    """

    value: ExtNat
    witness: int | None
    enumerated: int


def _walk_range(kernel_bits, image_pairs, start: int, stop_at, best, witness):
    """Gray-code walk over the span of ``kernel_bits`` offset by ``start``.

    Visits ``start`` plus all 2**len(kernel_bits) - 1 nonzero combinations
    XORed onto it, skipping the zero vector.  Returns (best, witness, count).
    """
    count = 0
    x = start

    def consider(x, best, witness):
        w = x.bit_count()
        if best is None or w < best:
            y = x
            for p, r in image_pairs:
                if (y >> p) & 1:
                    y ^= r
                    if not y:
                        break
            if y:
                return w, x
        return best, witness

    if x:
        count = 1
        best, witness = consider(x, best, witness)
        if stop_at is not None and best is not None and best <= stop_at:
            return best, witness, count
    for step in range(1, 1 << len(kernel_bits)):
        x ^= kernel_bits[(step & -step).bit_length() - 1]
        count += 1
        w = x.bit_count()
        if best is None or w < best:
            y = x
            for p, r in image_pairs:
                if (y >> p) & 1:
                    y ^= r
                    if not y:
                        break
            if y:
                best = w
                witness = x
                if stop_at is not None and best <= stop_at:
                    break
    return best, witness, count


def _walk_task(args):
    kernel_bits, image_pairs, start, stop_at = args
    return _walk_range(kernel_bits, image_pairs, start, stop_at, None, None)


def _search(kernel: EchelonBasis, image: EchelonBasis, stop_at, workers: int):
    kernel_bits = kernel.bits
    image_pairs = tuple(zip(image.pivot_cols, image.bits))
    dim = len(kernel_bits)
    if workers <= 1 or dim < 8:
        return _walk_range(kernel_bits, image_pairs, 0, stop_at, None, None)
    # Partition by fixing the top t kernel coordinates; sub-searches share
    # only immutable bases and merge by min.
    t = max(1, (workers - 1).bit_length())
    t = min(t, dim - 1)
    low = kernel_bits[: dim - t]
    top = kernel_bits[dim - t:]
    tasks = []
    for prefix in range(1 << t):
        start = 0
        p = prefix
        while p:
            i = (p & -p).bit_length() - 1
            start ^= top[i]
            p &= p - 1
        tasks.append((low, image_pairs, start, stop_at))
    best, witness, total = None, None, 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for b, w, c in pool.map(_walk_task, tasks):
            total += c
            if b is not None and (best is None or b < best):
                best, witness = b, w
    return best, witness, total


def _min_nontrivial(parity: BinMatrix, image_of: BinMatrix, *, cap: int,
                    lower_bound=None, workers: int = 1) -> DistanceResult:
    """Minimum weight over ``Ker(parity)`` outside the column span of ``image_of``."""
    kernel = kernel_basis(parity)
    image = column_space_basis(image_of)
    dim = len(kernel)
    if dim - len(image) == 0:
        # Trivial group: every cycle is a boundary.
        return DistanceResult(INFINITY, None, 0)
    if dim == parity.cols:
        # Zero or empty parity: every vector is a cycle, so some unit
        # vector is nontrivial and the distance is 1.
        for i in range(parity.cols):
            if (1 << i) not in image:
                return DistanceResult(ExtNat(1), 1 << i, 0)
        raise AssertionError("nontrivial group without a nontrivial unit vector")
    if dim > cap:
        raise KernelTooLarge(dim, cap)
    stop_at = None
    if lower_bound is not None:
        lb = as_extnat(lower_bound)
        if lb.is_finite:
            stop_at = lb.finite_value
    best, witness, count = _search(kernel, image, stop_at, workers)
    if best is None or witness is None:
        raise AssertionError("nontrivial group but the walk found no nontrivial cycle")
    if parity.mul_vec(witness) or witness in image or witness.bit_count() != best:
        raise AssertionError("distance witness failed post-hoc validation")
    return DistanceResult(ExtNat(best), witness, count)


def homological_distance(c: ChainComplex, level: int, *, cap: int = DEFAULT_KERNEL_CAP,
                         lower_bound=None, workers: int = 1) -> DistanceResult:
    """Exact level distance, or infinity when the homology group is trivial.

    ``lower_bound``, when supplied, lets the walk stop as soon as the
    current minimum reaches it (a valid lower bound implies optimality).
    Raises KernelTooLarge when the kernel dimension exceeds ``cap``.
    """
    if not 0 <= level <= c.m:
        raise LevelOutOfRange(f"level {level} outside 0..{c.m}")
    if c.homology_rank(level) == 0:
        return DistanceResult(INFINITY, None, 0)
    return _min_nontrivial(c.boundary(level), c.boundary(level + 1),
                           cap=cap, lower_bound=lower_bound, workers=workers)


def cohomological_distance(c: ChainComplex, level: int, *, cap: int = DEFAULT_KERNEL_CAP,
                           lower_bound=None, workers: int = 1) -> DistanceResult:
    """Distance of the conjugate group: the cochain complex at level m - level."""
    if not 0 <= level <= c.m:
        raise LevelOutOfRange(f"level {level} outside 0..{c.m}")
    return homological_distance(c.cochain(), c.m - level,
                                cap=cap, lower_bound=lower_bound, workers=workers)


def classical_distance(p: BinMatrix, cap: int = DEFAULT_KERNEL_CAP, *,
                       lower_bound=None, workers: int = 1) -> ExtNat:
    """Minimum weight of a nonzero vector with ``p @ x = 0``.

    Infinite when p has full column rank (only the zero codeword).
    """
    result = _min_nontrivial(p, BinMatrix.zeros(p.cols, 0),
                             cap=cap, lower_bound=lower_bound, workers=workers)
    return result.value


def nontrivial_weight_upper_bound(parity: BinMatrix, image_of: BinMatrix) -> ExtNat:
    """Cheap upper bound: lightest kernel basis vector outside the span.

    Finite whenever the group is nontrivial; used when the exact engine
    hits its cap.
    """
    kernel = kernel_basis(parity)
    image = column_space_basis(image_of)
    candidates = (b.bit_count() for b in kernel.bits if b not in image)
    best = None
    for w in candidates:
        if best is None or w < best:
            best = w
    return INFINITY if best is None else ExtNat(best)
