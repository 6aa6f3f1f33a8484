"""On-disk complex bundles: a manifest plus one alist file per boundary."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .alist import ParseError, read_alist, write_alist
from .complexes import ChainComplex
from .gf2 import DimensionMismatch

MANIFEST_NAME = "manifest.json"
FORMAT_TAG = "complex-bundle/1"


@dataclass
class Bundle:
    path: Path
    complex: ChainComplex
    manifest: dict

    @property
    def provenance(self) -> dict:
        return self.manifest.get("provenance", {})

    @property
    def source(self) -> dict:
        return self.provenance.get("source", {})


def save_bundle(cx: ChainComplex, directory, provenance: dict | None = None) -> Path:
    """Write the boundaries and a manifest; returns the bundle directory."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for j, boundary in enumerate(cx.boundaries, start=1):
        name = f"A{j}.alist"
        write_alist(boundary, directory / name)
        names.append(name)
    manifest = {
        "format": FORMAT_TAG,
        "m": cx.m,
        "dims": list(cx.dims),
        "boundaries": names,
        "provenance": provenance or {},
    }
    with open(directory / MANIFEST_NAME, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return directory


def load_bundle(directory) -> Bundle:
    """Read a bundle and re-validate the complex against its manifest."""
    directory = Path(directory)
    manifest_path = directory / MANIFEST_NAME
    try:
        with open(manifest_path, "r", encoding="utf-8") as fh:
            manifest = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, f"malformed manifest: {exc.msg}") from exc
    for key in ("m", "dims", "boundaries"):
        if key not in manifest:
            raise ParseError(1, f"manifest missing key {key!r}")
    matrices = [read_alist(directory / name) for name in manifest["boundaries"]]
    cx = ChainComplex(matrices)
    if cx.m != manifest["m"] or list(cx.dims) != list(manifest["dims"]):
        raise DimensionMismatch(
            f"manifest declares m={manifest['m']} dims={manifest['dims']}, "
            f"files give m={cx.m} dims={list(cx.dims)}")
    return Bundle(path=directory, complex=cx, manifest=manifest)
