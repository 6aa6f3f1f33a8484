"""Machine-readable reports for the CLI.

Reports are dicts serialized with sorted keys so diffs stay stable;
infinite distances serialize as the literal string "inf".
"""

from __future__ import annotations

import json

from . import __version__
from .codes import sparsity
from .complexes import ChainComplex
from .distance import KernelTooLarge, cohomological_distance, homological_distance
from .distance import nontrivial_weight_upper_bound
from .extnat import ExtNat

FORMATS = ("report", "json-lines")


def _json_default(obj):
    if isinstance(obj, ExtNat):
        return obj.finite_value if obj.is_finite else "inf"
    raise TypeError(f"not JSON serializable: {obj!r}")


def provenance(command: str, **fields) -> dict:
    prov = {"command": command, "version": __version__}
    prov.update(fields)
    return prov


def _witness_string(witness: int | None, length: int) -> str | None:
    if witness is None:
        return None
    return "".join(str((witness >> i) & 1) for i in range(length))


def analysis_levels(cx: ChainComplex) -> list[dict]:
    """Per-level dimension, homology rank, and boundary sparsity."""
    levels = []
    for j in range(cx.m + 1):
        entry = {
            "j": j,
            "n": cx.dim(j),
            "k": cx.homology_rank(j),
            "sparsity": list(sparsity(cx.boundary(j))) if j >= 1 else None,
        }
        levels.append(entry)
    return levels


def _side_entry(cx: ChainComplex, level: int, cohomology: bool, cap: int,
                threads: int) -> dict:
    compute = cohomological_distance if cohomology else homological_distance
    try:
        result = compute(cx, level, cap=cap, workers=threads)
        return {
            "d": result.value,
            "lower": result.value,
            "upper": result.value,
            "exact": True,
            "witness": _witness_string(result.witness, cx.dim(level)),
            "enumerated": result.enumerated,
        }
    except KernelTooLarge as exc:
        side = cx.cochain() if cohomology else cx
        j = cx.m - level if cohomology else level
        upper = nontrivial_weight_upper_bound(side.boundary(j), side.boundary(j + 1))
        return {
            "d": None,
            "lower": ExtNat(1),
            "upper": upper,
            "exact": False,
            "witness": None,
            "kernel_dim": exc.dim,
        }


def distance_levels(cx: ChainComplex, levels, cap: int, threads: int) -> tuple[list[dict], bool]:
    """Distance entries per requested level; flags whether any side hit the cap."""
    entries = []
    cap_hit = False
    for j in levels:
        homology = _side_entry(cx, j, False, cap, threads)
        cohomology = _side_entry(cx, j, True, cap, threads)
        cap_hit = cap_hit or not homology["exact"] or not cohomology["exact"]
        entries.append({
            "j": j,
            "n": cx.dim(j),
            "k": cx.homology_rank(j),
            "homology": homology,
            "cohomology": cohomology,
            "sparsity": list(sparsity(cx.boundary(j))) if j >= 1 else None,
        })
    return entries, cap_hit


def render(report: dict, fmt: str = "report") -> str:
    if fmt == "report":
        return json.dumps(report, indent=2, sort_keys=True, default=_json_default) + "\n"
    if fmt == "json-lines":
        lines = []
        for key, value in sorted(report.items()):
            if key == "levels":
                continue
            lines.append(json.dumps({"record": key, key: value},
                                    sort_keys=True, default=_json_default))
        for entry in report.get("levels", []):
            lines.append(json.dumps({"record": "level", **entry},
                                    sort_keys=True, default=_json_default))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
