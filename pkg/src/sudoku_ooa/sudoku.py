"""Sudoku grids of order q^2 and their subspace/flag structure on F^4.

A location in a grid is a 4-tuple (x1, x2, x3, x4) of field indices: (x1, x2)
is the base-q row number and (x3, x4) the base-q column number, so x1 picks
the large row (row of subsquares) and x3 the large column.  Symbols are plain
integers 0..q^2-1; symbol s has radix digit s // q and units digit s % q.

A grid is linear when every symbol's location set is a coset of one
2-dimensional subspace, and a flag adds a 3-dimensional space whose cosets
carry the radix digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import Field
from .linalg import (
    Subspace,
    coset_index_map,
    pack,
    rank,
    subspace_from,
    trivial_intersection,
)


class DimensionError(ValueError):
    """A subspace has the wrong dimension for the requested operation."""


class DimensionMismatch(ValueError):
    """Grids or arrays with incompatible shapes were combined."""


class NotSudokuFlag(ValueError):
    """The flag's 2-dimensional space does not generate a sudoku solution."""


class NotSudokuSubspace(ValueError):
    """The subspace does not generate a sudoku solution."""


class InvalidFlagData(ValueError):
    """A flag datum violates b != 0, beta != 0, or det != 0."""


@dataclass(frozen=True)
class Grid:
    """q^2 x q^2 grid of integer symbols, rows top to bottom."""

    q: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def side(self) -> int:
        return self.q * self.q

    def cell(self, r: int, c: int) -> int:
        return self.rows[r][c]


@dataclass(frozen=True)
class Flag:
    """Nested pair of subspaces: dim-2 symbol space inside dim-3 radix space.

    Symbols of the generated grid live on cosets of ``symbol_space`` and radix
    digits on cosets of ``radix_space``.  ``gamma``/``beta`` record the datum
    when the flag was built from one.
    """

    symbol_space: Subspace
    radix_space: Subspace
    gamma: tuple[tuple[int, int], tuple[int, int]] | None = None
    beta: int | None = None

    def __post_init__(self):
        if self.symbol_space.dim != 2 or self.radix_space.dim != 3:
            raise DimensionError("flag needs a dim-2 space inside a dim-3 space")
        field = self.field
        if rank(field, self.radix_space.basis + self.symbol_space.basis) != 3:
            raise DimensionError("symbol space is not contained in radix space")
        if self.gamma is not None:
            (a, b), (c, d) = self.gamma
            if self.symbol_space != subspace_from(
                field, [(1, 0, a, c), (0, 1, b, d)]
            ) or self.radix_space != subspace_from(
                field, [(1, 0, a, c), (0, 1, b, d), (0, 1, 0, self.beta)]
            ):
                raise InvalidFlagData("datum does not match the flag's spaces")

    @property
    def field(self) -> Field:
        return self.symbol_space.field


def flag_from_vectors(field: Field, v1, v2, v3) -> Flag:
    """Flag with symbol space <v1, v2> and radix space <v1, v2, v3>."""
    return Flag(subspace_from(field, [v1, v2]), subspace_from(field, [v1, v2, v3]))


def flag_from_data(field: Field, gamma, beta: int) -> Flag:
    """Canonical flag for a datum: columns (1,0,a,c), (0,1,b,d), (0,1,0,beta).

    The datum must satisfy b != 0, beta != 0 and det(gamma) != 0; each
    violation is reported distinctly.
    """
    (a, b), (c, d) = gamma
    if b == 0:
        raise InvalidFlagData("upper-right entry b of the matrix datum is zero")
    if beta == 0:
        raise InvalidFlagData("beta is zero")
    if field.sub(field.mul(a, d), field.mul(b, c)) == 0:
        raise InvalidFlagData("matrix datum is singular")
    flag = flag_from_vectors(field, (1, 0, a, c), (0, 1, b, d), (0, 1, 0, beta))
    return Flag(flag.symbol_space, flag.radix_space, ((a, b), (c, d)), beta)


def subspace_gamma(sub: Subspace):
    """2x2 matrix datum of a subspace spanned by (1,0,a,c), (0,1,b,d), if any."""
    if sub.dim != 2:
        return None
    r1, r2 = sub.basis
    if r1[:2] != (1, 0) or r2[:2] != (0, 1):
        return None
    return ((r1[2], r2[2]), (r1[3], r2[3]))


@lru_cache(maxsize=None)
def _blocking_spaces(field: Field) -> tuple[Subspace, Subspace, Subspace]:
    # Offsets between locations sharing a column, a row, and a subsquare.
    same_col = subspace_from(field, [(1, 0, 0, 0), (0, 1, 0, 0)])
    same_row = subspace_from(field, [(0, 0, 1, 0), (0, 0, 0, 1)])
    same_box = subspace_from(field, [(0, 1, 0, 0), (0, 0, 0, 1)])
    return same_col, same_row, same_box


def is_sudoku_subspace(g: Subspace) -> bool:
    """Whether the dim-2 subspace meets rows, columns and subsquares once each."""
    if g.dim != 2:
        raise DimensionError(f"expected a 2-dimensional subspace, got dim {g.dim}")
    return all(trivial_intersection(g, w) for w in _blocking_spaces(g.field))


def _grid_from_symbol_map(field: Field, symbol_at: list[int]) -> Grid:
    q = field.q
    side = q * q
    rows = [[0] * side for _ in range(side)]
    m = 0
    for x1 in range(q):
        for x2 in range(q):
            row = rows[q * x1 + x2]
            for x3 in range(q):
                for x4 in range(q):
                    row[q * x3 + x4] = symbol_at[m]
                    m += 1
    return Grid(q, tuple(tuple(r) for r in rows))


def generate(flag: Flag) -> Grid:
    """Grid of the flag's linear sudoku solution under canonical labeling.

    Radix-space cosets sorted by minimal representative get radix digits
    0..q-1; within each, its q symbol-space cosets sorted the same way get
    units digits 0..q-1.
    """
    if not is_sudoku_subspace(flag.symbol_space):
        raise NotSudokuFlag("symbol space does not generate a sudoku solution")
    field = flag.field
    q = field.q
    _, radix_ids = coset_index_map(flag.radix_space)
    sym_reps, sym_ids = coset_index_map(flag.symbol_space)
    groups: list[list[int]] = [[] for _ in range(q)]
    for sid, rep in enumerate(sym_reps):
        groups[radix_ids[pack(q, rep)]].append(sid)
    symbol_of = [0] * (q * q)
    for radix_digit, sids in enumerate(groups):
        for units, sid in enumerate(sids):
            symbol_of[sid] = q * radix_digit + units
    return _grid_from_symbol_map(field, [symbol_of[sid] for sid in sym_ids])


def generate_from_subspace(g: Subspace) -> Grid:
    """Linear sudoku solution whose symbols are the cosets of g.

    Cosets labeled 0..q^2-1 by increasing minimal representative.
    """
    if not is_sudoku_subspace(g):
        raise NotSudokuSubspace("subspace fails a row, column, or subsquare check")
    return _grid_from_symbol_map(g.field, coset_index_map(g)[1])


def radix(grid: Grid) -> Grid:
    """Cellwise first base-q digit."""
    q = grid.q
    return Grid(q, tuple(tuple(s // q for s in row) for row in grid.rows))


def composite(ri: Grid, rj: Grid) -> Grid:
    """Superimpose two radix-alphabet grids; the first supplies the radix digit."""
    _check_shapes(ri, rj)
    q = ri.q
    return Grid(
        q,
        tuple(
            tuple(q * a + b for a, b in zip(ra, rb))
            for ra, rb in zip(ri.rows, rj.rows)
        ),
    )


def _check_shapes(a: Grid, b: Grid) -> None:
    if a.q != b.q or a.side != b.side:
        raise DimensionMismatch(f"grid shapes differ: q={a.q} vs q={b.q}")


# -- predicates; each has a witness-reporting core used by the checkers ------


def _latin_violation(grid: Grid) -> str | None:
    side = grid.side
    full = frozenset(range(side))
    for r, row in enumerate(grid.rows):
        if set(row) != full:
            return f"row {r} is not a permutation of 0..{side - 1}"
    for c in range(side):
        if {row[c] for row in grid.rows} != full:
            return f"column {c} is not a permutation of 0..{side - 1}"
    return None


def _sudoku_violation(grid: Grid) -> str | None:
    why = _latin_violation(grid)
    if why is not None:
        return why
    q = grid.q
    full = frozenset(range(grid.side))
    for bi in range(q):
        for bj in range(q):
            seen = {
                grid.rows[q * bi + di][q * bj + dj]
                for di in range(q)
                for dj in range(q)
            }
            if seen != full:
                return f"subsquare ({bi},{bj}) misses a symbol"
    return None


def _subsquares_latin_violation(grid: Grid) -> str | None:
    q = grid.q
    digits = frozenset(range(q))
    for bi in range(q):
        for bj in range(q):
            for di in range(q):
                if {grid.rows[q * bi + di][q * bj + dj] for dj in range(q)} != digits:
                    return f"subsquare ({bi},{bj}) row {di} is not a permutation"
            for dj in range(q):
                if {grid.rows[q * bi + di][q * bj + dj] for di in range(q)} != digits:
                    return f"subsquare ({bi},{bj}) column {dj} is not a permutation"
    return None


def _orthogonality_violation(a: Grid, b: Grid) -> str | None:
    _check_shapes(a, b)
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for r in range(a.side):
        ra, rb = a.rows[r], b.rows[r]
        for c in range(a.side):
            pair = (ra[c], rb[c])
            if pair in seen:
                return f"pair {pair} at cells {seen[pair]} and {(r, c)}"
            seen[pair] = (r, c)
    return None


def _large_rows_violation(a: Grid, b: Grid) -> str | None:
    _check_shapes(a, b)
    q = a.q
    for big in range(q):
        seen: dict[tuple[int, int], tuple[int, int]] = {}
        for r in range(q * big, q * big + q):
            ra, rb = a.rows[r], b.rows[r]
            for c in range(a.side):
                pair = (ra[c], rb[c])
                if pair in seen:
                    return (
                        f"large row {big}: pair {pair} at cells"
                        f" {seen[pair]} and {(r, c)}"
                    )
                seen[pair] = (r, c)
    return None


def _large_cols_violation(a: Grid, b: Grid) -> str | None:
    _check_shapes(a, b)
    q = a.q
    for big in range(q):
        seen: dict[tuple[int, int], tuple[int, int]] = {}
        for c in range(q * big, q * big + q):
            for r in range(a.side):
                pair = (a.rows[r][c], b.rows[r][c])
                if pair in seen:
                    return (
                        f"large column {big}: pair {pair} at cells"
                        f" {seen[pair]} and {(r, c)}"
                    )
                seen[pair] = (r, c)
    return None


def is_latin(grid: Grid) -> bool:
    """Every row and column is a permutation of the side-length symbol set."""
    return _latin_violation(grid) is None


def is_sudoku(grid: Grid) -> bool:
    """Latin, and every canonical q x q subsquare holds every symbol."""
    return _sudoku_violation(grid) is None


def subsquares_latin(grid: Grid) -> bool:
    """Every canonical subsquare of a radix-alphabet grid is a latin square."""
    return _subsquares_latin_violation(grid) is None


def are_orthogonal(a: Grid, b: Grid) -> bool:
    """Superimposed ordered symbol pairs are all distinct."""
    return _orthogonality_violation(a, b) is None


def large_rows_orthogonal(a: Grid, b: Grid) -> bool:
    """No repeated superimposed pair within any large row."""
    return _large_rows_violation(a, b) is None


def large_cols_orthogonal(a: Grid, b: Grid) -> bool:
    """No repeated superimposed pair within any large column."""
    return _large_cols_violation(a, b) is None
