"""Consistency checks for bundles built as products.

Rebuilds the product from its recorded factors and checks, level by
level: dimension and homology-rank predictions, the bound sandwich around
exhaustively computed distances, and exact agreement with the closed-form
prediction when the right factor is a two-space complex.  Levels whose
kernels exceed the cap are skipped with a note, never silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .alist import read_alist
from .bundle import Bundle, load_bundle
from .complexes import ChainComplex, one_complex
from .distance import DEFAULT_KERNEL_CAP, KernelTooLarge, homological_distance
from .extnat import ExtNat, INFINITY
from .gf2 import BinMatrix
from .products import (
    DistanceBounds,
    distance_lower_bound,
    distance_upper_bound,
    kunneth_ranks,
    power_complex,
    predicted_distance,
    product_dimensions,
    tensor_product,
)


@dataclass
class VerifyOutcome:
    checks: int = 0
    violations: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.violations

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition:
            self.violations.append(message)


def _exact_distances(cx: ChainComplex, cap: int, workers: int) -> list[ExtNat | None]:
    """Per-level exact distances, None where the kernel exceeds the cap."""
    out: list[ExtNat | None] = []
    for j in range(cx.m + 1):
        try:
            out.append(homological_distance(cx, j, cap=cap, workers=workers).value)
        except KernelTooLarge:
            out.append(None)
    return out


def _factor_pair(bundle: Bundle) -> tuple[ChainComplex, ChainComplex] | None:
    """The two factors recorded in the bundle, or None for non-product bundles."""
    source = bundle.source
    kind = source.get("kind")
    if kind == "product":
        dirs = source.get("factors", [])
        if len(dirs) != 2:
            return None
        a = load_bundle(bundle.path / dirs[0]).complex
        b = load_bundle(bundle.path / dirs[1]).complex
        return a, b
    if kind == "power":
        p = read_alist(bundle.path / source["matrix"])
        a_exp, b_exp = source["a"], source["b"]
        if a_exp + b_exp < 2:
            return None
        if b_exp >= 1:
            prev = power_complex(p, a_exp, b_exp - 1)
            last = one_complex(p.transpose())
        else:
            prev = power_complex(p, a_exp - 1, 0)
            last = one_complex(p)
        return prev, last
    return None


def verify_bundle(bundle: Bundle, *, cap: int = DEFAULT_KERNEL_CAP,
                  workers: int = 1) -> VerifyOutcome:
    outcome = VerifyOutcome()
    cx = bundle.complex
    # Orthogonality already held, or loading would have failed.
    outcome.check(True, "orthogonality")

    pair = _factor_pair(bundle)
    if pair is None:
        outcome.notes.append("no product provenance; structural validation only")
        return outcome
    a, b = pair

    rebuilt = tensor_product(a, b)
    outcome.check(rebuilt == cx, "bundle matrices differ from the rebuilt product")

    for j in range(cx.m + 1):
        outcome.check(product_dimensions(a, b, j) == cx.dim(j),
                      f"level {j}: dimension prediction != actual")
        outcome.check(kunneth_ranks(a, b, j) == cx.homology_rank(j),
                      f"level {j}: homology rank prediction != actual")

    d_a = _exact_distances(a, cap, workers)
    d_b = _exact_distances(b, cap, workers)
    d_c = _exact_distances(cx, cap, workers)
    is_one_complex = b.m == 1
    p: BinMatrix | None = b.boundary(1) if is_one_complex else None

    for j in range(cx.m + 1):
        exact = d_c[j]
        if exact is None:
            outcome.notes.append(f"level {j}: kernel above cap, distance checks skipped")
            continue
        if cx.homology_rank(j) == 0:
            outcome.check(exact == INFINITY, f"level {j}: trivial group must be infinite")
            continue
        # The bound formulas read factor distances at indices 0..j.
        known = all(d_a[i] is not None for i in range(min(a.m, j) + 1)) and \
                all(d_b[i] is not None for i in range(min(b.m, j) + 1))
        if not known:
            outcome.notes.append(f"level {j}: factor distance above cap, bounds skipped")
            continue
        upper = distance_upper_bound(d_a, d_b, j)
        outcome.check(exact <= upper, f"level {j}: exact {exact} above upper bound {upper}")
        if exact < upper:
            outcome.notes.append(
                f"level {j}: strict gap, exact {exact} < upper bound {upper}")
        if is_one_complex and p is not None:
            try:
                bounds = DistanceBounds(
                    lower=distance_lower_bound(d_a, p, j, cap=cap),
                    upper=upper,
                    exact_prediction=predicted_distance(d_a, p, j, cap=cap),
                )
            except KernelTooLarge:
                outcome.notes.append(f"level {j}: seed kernel above cap, bounds skipped")
                continue
            except ValueError as exc:
                outcome.check(False, f"level {j}: inconsistent bounds ({exc})")
                continue
            outcome.check(bounds.lower <= exact,
                          f"level {j}: exact {exact} below lower bound {bounds.lower}")
            outcome.check(exact == bounds.exact_prediction,
                          f"level {j}: exact {exact} != prediction "
                          f"{bounds.exact_prediction}")
    return outcome
