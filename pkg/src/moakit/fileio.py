"""The array (.moa) and code (.code) file formats.

An array file:

    # comments run to end of line
    moa q=2
    cols 2 1 1
    row 0 0 0
    row 2 1 0

`q` is the base field order (any prime power), `cols` the column degrees,
and each `row` lists one canonical symbol label per column.  A code file is
the same shape with `code q=`, `type` for block sizes, and `gen` rows of
base-field symbols, one per generator row.

Both parsers auto-sort columns (blocks) into nonincreasing degree order and
record the permutation, so files may list columns in any order; writers
always emit the sorted form.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .blockcode import BlockCode, Partition, make_code
from .errors import EmptyFileError, NotPrimeError, ParseError
from .fields import prime_power
from .moa import MixedArray, mixed_array


@dataclass(frozen=True)
class LoadInfo:
    """How a file was interpreted: the applied column permutation (None when
    the file was already sorted) and free-form notes for reports."""

    column_permutation: tuple[int, ...] | None
    notes: tuple[str, ...] = ()


def _data_lines(text: str, path):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    if not out:
        raise EmptyFileError("no data lines", path=path)
    return out


def _parse_header(line, lineno, path, kind):
    parts = line.split()
    if len(parts) != 2 or parts[0] != kind or not parts[1].startswith("q="):
        raise ParseError(f"expected '{kind} q=<order>', got {line!r}",
                         path=path, line=lineno)
    try:
        q = int(parts[1][2:])
    except ValueError:
        raise ParseError(f"bad field order in {line!r}", path=path, line=lineno)
    return q


def _parse_int_line(line, lineno, path, keyword, expect=None):
    parts = line.split()
    if parts[0] != keyword:
        raise ParseError(f"expected '{keyword} ...', got {line!r}",
                         path=path, line=lineno)
    try:
        values = [int(tok) for tok in parts[1:]]
    except ValueError:
        raise ParseError(f"non-integer entry in {line!r}", path=path, line=lineno)
    if expect is not None and len(values) != expect:
        raise ParseError(
            f"expected {expect} entries after '{keyword}', got {len(values)}",
            path=path, line=lineno)
    if not values:
        raise ParseError(f"'{keyword}' line is empty", path=path, line=lineno)
    return values


def _checked_field(q, path, lineno):
    try:
        return prime_power(q)
    except NotPrimeError as e:
        raise ParseError(str(e), path=path, line=lineno) from e


def parse_moa_text(text: str, path=None) -> tuple[MixedArray, LoadInfo]:
    lines = _data_lines(text, path)
    q = _parse_header(lines[0][1], lines[0][0], path, "moa")
    _checked_field(q, path, lines[0][0])
    degrees = _parse_int_line(lines[1][1], lines[1][0], path, "cols")
    if any(m < 1 for m in degrees):
        raise ParseError(f"column degrees must be >= 1, got {degrees}",
                         path=path, line=lines[1][0])
    s = len(degrees)
    rows = []
    for lineno, line in lines[2:]:
        symbols = _parse_int_line(line, lineno, path, "row", expect=s)
        for i, (sym, m) in enumerate(zip(symbols, degrees)):
            if not 0 <= sym < q**m:
                raise ParseError(
                    f"symbol {sym} in column {i + 1} outside [0, {q**m})",
                    path=path, line=lineno)
        rows.append(symbols)
    if not rows:
        raise EmptyFileError("array file has no rows", path=path)
    part, perm = Partition.sort_with_permutation(degrees)
    notes = []
    permutation = None
    if perm != tuple(range(s)):
        rows = [[r[j] for j in perm] for r in rows]
        permutation = perm
        notes.append(
            "columns sorted by degree; new order uses original columns "
            + " ".join(str(j + 1) for j in perm)
        )
    arr = mixed_array(q, part.sizes, rows)
    return arr, LoadInfo(column_permutation=permutation, notes=tuple(notes))


def parse_moa_file(path) -> tuple[MixedArray, LoadInfo]:
    return parse_moa_text(Path(path).read_text(), path=str(path))


def parse_code_text(text: str, path=None) -> tuple[BlockCode, LoadInfo]:
    lines = _data_lines(text, path)
    q = _parse_header(lines[0][1], lines[0][0], path, "code")
    base = _checked_field(q, path, lines[0][0])
    sizes = _parse_int_line(lines[1][1], lines[1][0], path, "type")
    if any(m < 1 for m in sizes):
        raise ParseError(f"block sizes must be >= 1, got {sizes}",
                         path=path, line=lines[1][0])
    n = sum(sizes)
    rows = []
    for lineno, line in lines[2:]:
        symbols = _parse_int_line(line, lineno, path, "gen", expect=n)
        bad = [x for x in symbols if not 0 <= x < q]
        if bad:
            raise ParseError(f"symbol {bad[0]} outside [0, {q})",
                             path=path, line=lineno)
        rows.append(symbols)
    if not rows:
        raise EmptyFileError("code file has no generator rows", path=path)
    part, perm = Partition.sort_with_permutation(sizes)
    notes = []
    permutation = None
    if perm != tuple(range(len(sizes))):
        starts = [0]
        for m in sizes:
            starts.append(starts[-1] + m)
        rows = [
            [x for j in perm for x in r[starts[j]:starts[j + 1]]]
            for r in rows
        ]
        permutation = perm
        notes.append(
            "blocks sorted by size; new order uses original blocks "
            + " ".join(str(j + 1) for j in perm)
        )
    code = make_code(part, base, rows)
    if code.k < len(rows):
        notes.append(f"dropped {len(rows) - code.k} dependent generator rows")
    return code, LoadInfo(column_permutation=permutation, notes=tuple(notes))


def parse_code_file(path) -> tuple[BlockCode, LoadInfo]:
    return parse_code_text(Path(path).read_text(), path=str(path))


def format_moa(arr: MixedArray, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}".rstrip())
    out.append(f"moa q={arr.base.q}")
    out.append("cols " + " ".join(str(m) for m in arr.degrees))
    for row in arr.rows:
        out.append("row " + " ".join(str(int(x)) for x in row))
    return "\n".join(out) + "\n"


def format_code(code: BlockCode, comment: str | None = None) -> str:
    out = []
    if comment:
        for line in comment.splitlines():
            out.append(f"# {line}".rstrip())
    out.append(f"code q={code.field.q}")
    out.append("type " + " ".join(str(m) for m in code.partition.sizes))
    for row in np.asarray(code.gen):
        out.append("gen " + " ".join(str(int(x)) for x in row))
    return "\n".join(out) + "\n"
