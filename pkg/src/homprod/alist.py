"""Sparse binary matrix interchange in the plain-text alist format.

Layout (indices are 1-based):

    line 1: <cols> <rows>
    line 2: <max column weight> <max row weight>
    line 3: per-column weights
    line 4: per-row weights
    next <cols> lines: row indices of the ones in each column
    next <rows> lines: column indices of the ones in each row

Some writers pad short adjacency lines with zeros; padding is accepted on
read and never emitted on write.
"""

from __future__ import annotations

import os

from .gf2 import BinMatrix


class ParseError(ValueError):
    """Malformed alist text; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InconsistentWeights(ParseError):
    """Weight declarations and adjacency lists disagree."""


def dumps_alist(m: BinMatrix) -> str:
    col_w = m.col_weights()
    row_w = m.row_weights()
    lines = [
        f"{m.cols} {m.rows}",
        f"{max(col_w, default=0)} {max(row_w, default=0)}",
        " ".join(str(w) for w in col_w),
        " ".join(str(w) for w in row_w),
    ]
    cols = m.transpose()
    for j in range(m.cols):
        b = cols.row_bits(j)
        entries = []
        while b:
            i = (b & -b).bit_length() - 1
            entries.append(str(i + 1))
            b &= b - 1
        lines.append(" ".join(entries))
    for i in range(m.rows):
        b = m.row_bits(i)
        entries = []
        while b:
            j = (b & -b).bit_length() - 1
            entries.append(str(j + 1))
            b &= b - 1
        lines.append(" ".join(entries))
    return "\n".join(lines) + "\n"


def _ints(lines: list[str], lineno: int) -> list[int]:
    if lineno - 1 >= len(lines):
        raise ParseError(lineno, "unexpected end of file")
    try:
        return [int(tok) for tok in lines[lineno - 1].split()]
    except ValueError:
        raise ParseError(lineno, f"non-integer token in {lines[lineno - 1]!r}") from None


def loads_alist(text: str) -> BinMatrix:
    lines = text.splitlines()
    header = _ints(lines, 1)
    if len(header) != 2 or header[0] < 0 or header[1] < 0:
        raise ParseError(1, "expected '<cols> <rows>'")
    cols, rows = header
    maxes = _ints(lines, 2)
    if len(maxes) != 2:
        raise ParseError(2, "expected '<max col weight> <max row weight>'")
    col_w = _ints(lines, 3)
    if len(col_w) != cols:
        raise InconsistentWeights(3, f"expected {cols} column weights, got {len(col_w)}")
    row_w = _ints(lines, 4)
    if len(row_w) != rows:
        raise InconsistentWeights(4, f"expected {rows} row weights, got {len(row_w)}")
    if maxes != [max(col_w, default=0), max(row_w, default=0)]:
        raise InconsistentWeights(2, "declared maxima do not match the weight lists")

    bits = [0] * rows
    for j in range(cols):
        lineno = 5 + j
        entries = [e for e in _ints(lines, lineno) if e != 0]
        if len(entries) != col_w[j]:
            raise InconsistentWeights(
                lineno, f"column {j} lists {len(entries)} entries, weight says {col_w[j]}")
        for e in entries:
            if not 1 <= e <= rows:
                raise ParseError(lineno, f"row index {e} outside 1..{rows}")
            if (bits[e - 1] >> j) & 1:
                raise InconsistentWeights(lineno, f"duplicate entry {e} in column {j}")
            bits[e - 1] |= 1 << j
    for i in range(rows):
        lineno = 5 + cols + i
        entries = [e for e in _ints(lines, lineno) if e != 0]
        if len(entries) != row_w[i]:
            raise InconsistentWeights(
                lineno, f"row {i} lists {len(entries)} entries, weight says {row_w[i]}")
        mask = 0
        for e in entries:
            if not 1 <= e <= cols:
                raise ParseError(lineno, f"column index {e} outside 1..{cols}")
            mask |= 1 << (e - 1)
        if mask != bits[i]:
            raise InconsistentWeights(lineno, f"row {i} adjacency disagrees with columns")
    for extra in range(4 + cols + rows, len(lines)):
        if lines[extra].strip():
            raise ParseError(extra + 1, "trailing non-blank line")
    return BinMatrix(rows, cols, bits)


def write_alist(m: BinMatrix, path) -> None:
    with open(os.fspath(path), "w", encoding="ascii") as fh:
        fh.write(dumps_alist(m))


def read_alist(path) -> BinMatrix:
    with open(os.fspath(path), "r", encoding="ascii") as fh:
        return loads_alist(fh.read())
