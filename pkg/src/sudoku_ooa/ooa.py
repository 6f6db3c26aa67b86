"""Banded arrays: assembly from sudoku grids and exhaustive verification.

An array has s bands of 2 rows over a q-ary alphabet and q^4 columns, one per
grid location in lexicographic order.  The first two bands carry the location
digits and every further band the radix and units digits of one grid's
symbols.  Verification checks the exactly-once condition on every 4-row
top-justified set (mode ``ooa``) or only on those whose bands past the second
contribute 0 or 2 rows (mode ``sa``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .sudoku import DimensionMismatch

STRENGTH = 4  # tuples checked per row set
BAND_WIDTH = 2  # rows per band
MULTIPLICITY = 1  # occurrences required per tuple

RowSet = frozenset  # of (band, depth) labels, both 1-based


class MalformedArray(ValueError):
    """Array entries or dimensions are inconsistent."""


class NotTopJustified(ValueError):
    """A row set includes a depth-2 row without its band's depth-1 row."""


class GridCountZero(ValueError):
    """Assembly needs at least one grid."""


@dataclass(frozen=True)
class BandedArray:
    """2s x q^4 array over 0..q-1; row (band, depth) sits at 2(band-1)+depth-1."""

    q: int
    s: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        q, s = self.q, self.s
        if q < 2 or s < 2:
            raise MalformedArray(f"need q >= 2 and s >= 2, got q={q}, s={s}")
        if len(self.rows) != 2 * s:
            raise MalformedArray(f"expected {2 * s} rows, got {len(self.rows)}")
        ncols = q**STRENGTH
        for r, row in enumerate(self.rows):
            if len(row) != ncols:
                raise MalformedArray(f"row {r}: expected {ncols} columns, got {len(row)}")
            if any(not 0 <= x < q for x in row):
                raise MalformedArray(f"row {r}: entry outside 0..{q - 1}")

    def row(self, band: int, depth: int) -> tuple[int, ...]:
        return self.rows[2 * (band - 1) + (depth - 1)]


def assemble(grids) -> BandedArray:
    """Array of the grids: location digits, then radix/units digits per grid.

    Columns are indexed by location in lexicographic order.
    """
    grids = list(grids)
    if not grids:
        raise GridCountZero("at least one grid is required")
    q = grids[0].q
    for g in grids:
        if g.q != q or g.side != q * q:
            raise DimensionMismatch("grids must share one order q")
    ncols = q**4
    rows = [[0] * ncols for _ in range(2 * (len(grids) + 2))]
    cells = [g.rows for g in grids]
    m = 0
    for x1 in range(q):
        for x2 in range(q):
            r = q * x1 + x2
            for x3 in range(q):
                for x4 in range(q):
                    rows[0][m] = x1
                    rows[1][m] = x2
                    rows[2][m] = x3
                    rows[3][m] = x4
                    c = q * x3 + x4
                    for t, grid_rows in enumerate(cells):
                        sym = grid_rows[r][c]
                        rows[4 + 2 * t][m] = sym // q
                        rows[5 + 2 * t][m] = sym % q
                    m += 1
    return BandedArray(q, len(grids) + 2, tuple(tuple(r) for r in rows))


def top_justified_sets(s: int) -> list[RowSet]:
    """All 4-row top-justified sets for s bands, in a fixed order.

    Enumerated by band depth vectors (d_1..d_s) in {0,1,2}^s with sum 4,
    shallowest first: by maximum depth used, then lexicographically.  The
    all-top-rows sets therefore come before any set using a second band row.
    """
    if s < 2:
        raise ValueError(f"need at least 2 bands, got {s}")
    vectors = [d for d in product((0, 1, 2), repeat=s) if sum(d) == STRENGTH]
    vectors.sort(key=lambda depths: (max(depths), depths))
    return [
        frozenset(
            (band, depth)
            for band, d in enumerate(depths, start=1)
            for depth in range(1, d + 1)
        )
        for depths in vectors
    ]


# Band-depth signatures (top-row-band depth, top-column-band depth, sorted
# symbol-band depths) of the possible non-sudoku top-justified forms.
_FORMS = {
    (1, 2, (1,)): "1a",
    (2, 1, (1,)): "1b",
    (1, 1, (1, 1)): "2a",
    (2, 0, (1, 1)): "2b",
    (0, 2, (1, 1)): "2c",
    (0, 1, (2, 1)): "2d",
    (1, 0, (2, 1)): "2e",
    (1, 0, (1, 1, 1)): "3a",
    (0, 1, (1, 1, 1)): "3b",
    (0, 0, (2, 1, 1)): "3c",
    (0, 0, (1, 1, 1, 1)): "4a",
}


def classify(rowset) -> str:
    """Form label of a top-justified 4-row set.

    ``sudoku-TJ`` when every band past the second contributes 0 or 2 rows;
    otherwise the unique label determined by the band depth signature.
    """
    labels = set(rowset)
    if len(labels) != STRENGTH or any(
        d not in (1, 2) or b < 1 for b, d in labels
    ):
        raise NotTopJustified(f"not a set of 4 (band, depth) labels: {sorted(labels)}")
    depths: dict[int, int] = {}
    for band, depth in labels:
        depths[band] = max(depths.get(band, 0), depth)
    for band, d in depths.items():
        if d == 2 and (band, 1) not in labels:
            raise NotTopJustified(f"band {band} has its second row but not its first")
    r = depths.get(1, 0)
    c = depths.get(2, 0)
    symbol_depths = tuple(sorted((d for b, d in depths.items() if b >= 3), reverse=True))
    if all(d == 2 for d in symbol_depths):
        return "sudoku-TJ"
    return _FORMS[(r, c, symbol_depths)]


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    row_set: RowSet | None = None
    duplicate: tuple[int, int, int, int] | None = None
    first_column: int | None = None
    second_column: int | None = None

    def witness_text(self) -> str:
        if self.ok:
            return ""
        labels = ",".join(f"({b},{d})" for b, d in sorted(self.row_set))
        digits = "".join(str(x) for x in self.duplicate)
        return (
            f"rows {labels} repeat tuple {digits} at columns"
            f" {self.first_column} and {self.second_column}"
        )


def row_set_duplicate(array: BandedArray, rowset) -> tuple | None:
    """First duplicated 4-tuple in the row set, as (tuple, col_a, col_b)."""
    q = array.q
    r0, r1, r2, r3 = (array.row(b, d) for b, d in sorted(rowset))
    occupancy = [-1] * q**STRENGTH
    for m in range(q**STRENGTH):
        key = ((r0[m] * q + r1[m]) * q + r2[m]) * q + r3[m]
        prev = occupancy[key]
        if prev >= 0:
            return (r0[m], r1[m], r2[m], r3[m]), prev, m
        occupancy[key] = m
    return None


def verify(array: BandedArray, mode: str = "ooa") -> VerifyResult:
    """Exhaustive exactly-once check over the mode's row sets.

    Mode ``ooa`` checks every top-justified set, ``sa`` only the sudoku
    top-justified ones.  Returns the first failing set with a duplicated
    tuple and its two column indices.
    """
    if mode not in ("ooa", "sa"):
        raise ValueError(f"unknown mode {mode!r}")
    for rowset in top_justified_sets(array.s):
        if mode == "sa" and classify(rowset) != "sudoku-TJ":
            continue
        hit = row_set_duplicate(array, rowset)
        if hit is not None:
            dup, first, second = hit
            return VerifyResult(False, rowset, dup, first, second)
    return VerifyResult(True)
