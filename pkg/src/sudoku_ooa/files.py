"""Plain-text file formats for grids, flag data, and banded arrays.

All numbers are decimal canonical field indices.  Every format starts with a
single header line naming the kind and its parameters.
"""

from __future__ import annotations

from .gf import make_field
from .ooa import BandedArray, MalformedArray
from .strong import FlagData
from .sudoku import Grid

ARRAY_HEADER = "ooa t=4 s={s} l=2 v={q}"


class ParseError(ValueError):
    """A text artifact failed to parse; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _header_fields(line: str, kind: str, expected_keys: tuple[str, ...]) -> dict[str, int]:
    parts = line.split()
    if not parts or parts[0] != kind:
        raise ParseError(1, f"expected a '{kind}' header, got {line!r}")
    out = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        if key not in expected_keys or not value:
            raise ParseError(1, f"unexpected header field {part!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise ParseError(1, f"non-integer header value {part!r}") from None
    missing = [k for k in expected_keys if k not in out]
    if missing:
        raise ParseError(1, f"missing header fields: {', '.join(missing)}")
    return out


def _int_row(line: str, lineno: int, expected: int) -> tuple[int, ...]:
    try:
        row = tuple(int(tok) for tok in line.split())
    except ValueError:
        raise ParseError(lineno, f"non-integer entry in {line!r}") from None
    if len(row) != expected:
        raise ParseError(lineno, f"expected {expected} entries, got {len(row)}")
    return row


def _body_lines(text: str, count: int, what: str) -> list[tuple[int, str]]:
    lines = text.splitlines()
    body = [(i + 1, ln) for i, ln in enumerate(lines) if i > 0 and ln.strip()]
    if len(body) < count:
        raise ParseError(len(lines) + 1, f"expected {count} {what} lines, got {len(body)}")
    if len(body) > count:
        raise ParseError(body[count][0], f"expected {count} {what} lines, got {len(body)}")
    return body


def grid_to_text(grid: Grid) -> str:
    lines = [f"sudoku q={grid.q}"]
    lines.extend(" ".join(str(x) for x in row) for row in grid.rows)
    return "\n".join(lines) + "\n"


def grid_from_text(text: str) -> Grid:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty file")
    q = _header_fields(lines[0], "sudoku", ("q",))["q"]
    if q < 2:
        raise ParseError(1, f"grid order q must be at least 2, got {q}")
    side = q * q
    rows = []
    for lineno, ln in _body_lines(text, side, "grid"):
        row = _int_row(ln, lineno, side)
        bad = [x for x in row if not 0 <= x < side]
        if bad:
            raise ParseError(lineno, f"symbol {bad[0]} outside 0..{side - 1}")
        rows.append(row)
    return Grid(q, tuple(rows))


def flags_to_text(data) -> str:
    data = list(data)
    q = data[0].field.q
    lines = [f"flags q={q} count={len(data)}"]
    lines.extend(f"{d.a} {d.b} {d.c} {d.d} {d.beta}" for d in data)
    return "\n".join(lines) + "\n"


def flags_from_text(text: str) -> list[FlagData]:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty file")
    header = _header_fields(lines[0], "flags", ("q", "count"))
    field = make_field(header["q"])
    out = []
    for lineno, ln in _body_lines(text, header["count"], "flag datum"):
        a, b, c, d, beta = _int_row(ln, lineno, 5)
        out.append(FlagData(field, a, b, c, d, beta))
    return out


def array_to_text(array: BandedArray) -> str:
    lines = [ARRAY_HEADER.format(s=array.s, q=array.q)]
    lines.extend(" ".join(str(x) for x in row) for row in array.rows)
    return "\n".join(lines) + "\n"


def array_from_text(text: str) -> BandedArray:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty file")
    header = _header_fields(lines[0], "ooa", ("t", "s", "l", "v"))
    if header["t"] != 4 or header["l"] != 2:
        raise ParseError(1, f"only t=4, l=2 arrays are supported, got {lines[0]!r}")
    s, q = header["s"], header["v"]
    rows = [
        _int_row(ln, lineno, q**4)
        for lineno, ln in _body_lines(text, 2 * s, "array")
    ]
    try:
        return BandedArray(q, s, tuple(rows))
    except MalformedArray as exc:
        raise ParseError(1, str(exc)) from None
