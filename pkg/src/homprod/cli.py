"""Command-line driver.

Exit codes: 0 ok, 2 validation failure, 3 kernel cap exceeded, 4 parse or
I/O error.  All commands are deterministic given their flags and seeds,
and reports embed full provenance.
"""

from __future__ import annotations

import argparse
import json
import shutil
import sys
from pathlib import Path

from .alist import ParseError, read_alist, write_alist
from .bundle import load_bundle, save_bundle
from .codes import EnsembleSpec, InvalidSpec, extract_css, generate_matrix
from .complexes import (
    ChainComplex,
    IndexOutOfRange,
    LevelOutOfRange,
    NotOrthogonal,
    one_complex,
)
from .distance import DEFAULT_KERNEL_CAP, KernelTooLarge
from .gf2 import DimensionMismatch
from .products import InvalidExponents, power_complex, tensor_product
from .report import FORMATS, analysis_levels, distance_levels, provenance, render
from .verify import verify_bundle

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CAP = 3
EXIT_IO = 4

_VALIDATION_ERRORS = (
    DimensionMismatch,
    NotOrthogonal,
    LevelOutOfRange,
    IndexOutOfRange,
    InvalidSpec,
    InvalidExponents,
)


def _seed_matrix(args, parser):
    if bool(args.matrix) == bool(args.ensemble):
        parser.error("exactly one of --matrix or --ensemble is required")
    if args.matrix:
        if len(args.matrix) > 1:
            parser.error("power takes a single seed matrix")
        return read_alist(args.matrix[0]), {"kind": "matrix", "file": str(args.matrix[0])}
    spec = EnsembleSpec.parse(args.ensemble, seed=args.seed)
    return generate_matrix(spec), {"kind": "ensemble", "spec": args.ensemble,
                                   "seed": args.seed}


def cmd_build(args, parser) -> int:
    if bool(args.matrix) == bool(args.ensemble):
        parser.error("exactly one of --matrix or --ensemble is required")
    if args.matrix:
        matrices = [read_alist(p) for p in args.matrix]
        cx = ChainComplex(matrices)
        source = {"kind": "matrices", "files": [str(p) for p in args.matrix]}
    else:
        spec = EnsembleSpec.parse(args.ensemble, seed=args.seed)
        cx = one_complex(generate_matrix(spec))
        source = {"kind": "ensemble", "spec": args.ensemble, "seed": args.seed}
    save_bundle(cx, args.out, provenance("build", seed=args.seed, source=source))
    print(f"wrote bundle {args.out} (m={cx.m}, dims={list(cx.dims)})")
    return EXIT_OK


def cmd_product(args, parser) -> int:
    a = load_bundle(args.a_bundle)
    b = load_bundle(args.b_bundle)
    cx = tensor_product(a.complex, b.complex)
    out = Path(args.out)
    source = {"kind": "product", "factors": ["factors/0", "factors/1"]}
    save_bundle(cx, out, provenance("product", source=source))
    for i, factor in enumerate((a, b)):
        shutil.copytree(factor.path, out / "factors" / str(i), dirs_exist_ok=True)
    print(f"wrote bundle {out} (m={cx.m}, dims={list(cx.dims)})")
    return EXIT_OK


def cmd_power(args, parser) -> int:
    p, seed_source = _seed_matrix(args, parser)
    cx = power_complex(p, args.a, args.b)
    out = Path(args.out)
    source = {"kind": "power", "a": args.a, "b": args.b, "matrix": "seed.alist"}
    if seed_source["kind"] == "ensemble":
        source["ensemble"] = seed_source["spec"]
        source["seed"] = seed_source["seed"]
    else:
        source["seed_file"] = seed_source["file"]
    save_bundle(cx, out, provenance("power", seed=args.seed, a=args.a, b=args.b,
                                    source=source))
    write_alist(p, out / "seed.alist")
    print(f"wrote bundle {out} (m={cx.m}, dims={list(cx.dims)})")
    return EXIT_OK


def cmd_analyze(args, parser) -> int:
    bundle = load_bundle(args.bundle)
    report = {
        "provenance": provenance("analyze", bundle=str(args.bundle)),
        "m": bundle.complex.m,
        "dims": list(bundle.complex.dims),
        "levels": analysis_levels(bundle.complex),
    }
    sys.stdout.write(render(report, args.format))
    return EXIT_OK


def cmd_distance(args, parser) -> int:
    bundle = load_bundle(args.bundle)
    cx = bundle.complex
    levels = args.level if args.level else list(range(cx.m + 1))
    for j in levels:
        if not 0 <= j <= cx.m:
            raise LevelOutOfRange(f"level {j} outside 0..{cx.m}")
    entries, cap_hit = distance_levels(cx, levels, args.cap, args.threads)
    report = {
        "provenance": provenance("distance", bundle=str(args.bundle), cap=args.cap,
                                 threads=args.threads, levels=levels),
        "m": cx.m,
        "dims": list(cx.dims),
        "levels": entries,
    }
    sys.stdout.write(render(report, args.format))
    return EXIT_CAP if cap_hit else EXIT_OK


def cmd_verify(args, parser) -> int:
    bundle = load_bundle(args.bundle)
    outcome = verify_bundle(bundle, cap=args.cap, workers=args.threads)
    for note in outcome.notes:
        print(f"note: {note}")
    for violation in outcome.violations:
        print(f"violation: {violation}")
    print(f"checks={outcome.checks} violations={len(outcome.violations)}")
    return EXIT_OK if outcome.ok() else EXIT_VALIDATION


def cmd_export_css(args, parser) -> int:
    bundle = load_bundle(args.bundle)
    code = extract_css(bundle.complex, args.level)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_alist(code.g_x, out / "gx.alist")
    write_alist(code.g_z, out / "gz.alist")
    meta = {"level": args.level, "n": code.n, "g_x": "gx.alist", "g_z": "gz.alist"}
    with open(out / "css.json", "w", encoding="utf-8") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {out / 'gx.alist'} and {out / 'gz.alist'}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homprod",
        description="Build product chain complexes over GF(2) and compute code parameters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, seed=False, cap=False, fmt=False):
        if seed:
            p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_KERNEL_CAP,
                           help="kernel dimension cap for exact searches")
            p.add_argument("--threads", type=int, default=1,
                           help="parallel sub-searches for the distance walk")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="report")

    p = sub.add_parser("build", help="bundle a complex from matrix files or an ensemble")
    p.add_argument("--matrix", action="append", default=[],
                   help="alist file; repeat for A_1..A_m in order")
    p.add_argument("--ensemble", help="gallager:v,w,c | rep:L | id:n | file:PATH")
    p.add_argument("--out", required=True)
    add_common(p, seed=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("product", help="tensor product of two bundles")
    p.add_argument("a_bundle")
    p.add_argument("b_bundle")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("power", help="product of copies of K(P) and K(P^T)")
    p.add_argument("--matrix", action="append", default=[], help="seed alist file")
    p.add_argument("--ensemble", help="gallager:v,w,c | rep:L | id:n | file:PATH")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out", required=True)
    add_common(p, seed=True)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("analyze", help="dimensions, homology ranks, sparsity")
    p.add_argument("bundle")
    add_common(p, fmt=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("distance", help="exact distances and witnesses per level")
    p.add_argument("bundle")
    p.add_argument("--level", action="append", type=int,
                   help="level to search; repeatable; default all")
    add_common(p, cap=True, fmt=True)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify", help="check product predictions and bound sandwich")
    p.add_argument("bundle")
    add_common(p, cap=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-css", help="write G_X and G_Z alist files for a level")
    p.add_argument("bundle")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_export_css)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except KernelTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
