"""Strong-orthogonality checkers for families of sudoku solutions.

A family of s-2 mutually orthogonal sudoku solutions is strongly orthogonal
when it satisfies a tiered condition system; the tiers activate at family
parameters s >= 3, 4, 5, 6.  Two independent checkers evaluate the system:

* ``check_algebraic`` works on flag data alone, through 2x2/3x3 determinants
  and subspace intersections;
* ``check_combinatorial`` works on the grids themselves, by exhaustive
  enumeration of symbol pairs.

Both emit a ConditionReport keyed by condition label and index tuple, and
they must agree verdict-for-verdict on families generated from flag data.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations, permutations

from .gf import Field
from .linalg import Subspace, det, intersect, mat_sub, subspace_from, trivial_intersection
from .sudoku import (
    Flag,
    InvalidFlagData,
    _check_shapes,
    _large_cols_violation,
    _large_rows_violation,
    _orthogonality_violation,
    _subsquares_latin_violation,
    _sudoku_violation,
    composite,
    flag_from_data,
    radix,
    subspace_gamma,
)


class HypothesisViolated(ValueError):
    """The closed-form composite matrix is undefined for this datum pair."""


class NotMutuallyOrthogonal(ValueError):
    """The family is not a set of mutually orthogonal sudoku solutions."""


CONDITION_LABELS = ("i", "ii.a", "ii.b", "ii.c", "iii.a", "iii.b", "iii.c", "iv")

_THRESHOLD = {
    "i": 3,
    "ii.a": 4,
    "ii.b": 4,
    "ii.c": 4,
    "iii.a": 5,
    "iii.b": 5,
    "iii.c": 5,
    "iv": 6,
}


@dataclass(frozen=True)
class FlagData:
    """Validated datum (2x2 matrix entries a,b,c,d plus beta) of a flag."""

    field: Field
    a: int
    b: int
    c: int
    d: int
    beta: int
    det: int = dc_field(init=False, compare=False)
    delta: int = dc_field(init=False, compare=False)

    def __post_init__(self):
        f = self.field
        for x in (self.a, self.b, self.c, self.d, self.beta):
            if not 0 <= x < f.q:
                raise InvalidFlagData(f"entry {x} outside field of order {f.q}")
        if self.b == 0:
            raise InvalidFlagData("upper-right entry b of the matrix datum is zero")
        if self.beta == 0:
            raise InvalidFlagData("beta is zero")
        d = f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
        if d == 0:
            raise InvalidFlagData("matrix datum is singular")
        object.__setattr__(self, "det", d)
        object.__setattr__(self, "delta", f.inv(d))

    @property
    def gamma(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def flag(self) -> Flag:
        return flag_from_data(self.field, self.gamma, self.beta)


@dataclass(frozen=True)
class FixedSubspaces:
    """Location spaces of the top large row and the left large column."""

    top_large_row: Subspace
    left_large_col: Subspace


@lru_cache(maxsize=None)
def fixed_subspaces(field: Field) -> FixedSubspaces:
    return FixedSubspaces(
        top_large_row=subspace_from(field, [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
        left_large_col=subspace_from(field, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)]),
    )


def gamma_composite(di: FlagData, dj: FlagData):
    """Closed-form matrix datum of the intersection of two radix spaces.

    Defined when beta_i != beta_j and b_i(d_j-beta_j) - b_j(d_i-beta_i) != 0;
    equals the datum of intersect(V_i, V_j) computed by linear algebra.
    """
    f = di.field
    if f != dj.field:
        raise ValueError("data lie over different fields")
    mul, sub = f.mul, f.sub
    beta_diff = sub(di.beta, dj.beta)
    if beta_diff == 0:
        raise HypothesisViolated("beta_i equals beta_j")
    ei = sub(di.d, di.beta)  # d_i - beta_i
    ej = sub(dj.d, dj.beta)
    denom = sub(mul(di.b, ej), mul(dj.b, ei))
    if denom == 0:
        raise HypothesisViolated("b_i(d_j-beta_j) - b_j(d_i-beta_i) is zero")
    inv_denom = f.inv(denom)
    bb = mul(di.b, dj.b)
    a12 = mul(
        f.add(
            mul(bb, sub(di.c, dj.c)),
            sub(mul(mul(dj.a, di.b), ej), mul(mul(di.a, dj.b), ei)),
        ),
        inv_denom,
    )
    b12 = mul(mul(bb, beta_diff), inv_denom)
    c12 = mul(
        f.add(
            sub(mul(mul(di.b, di.c), ej), mul(mul(dj.b, dj.c), ei)),
            mul(mul(sub(dj.a, di.a), ei), ej),
        ),
        inv_denom,
    )
    d12 = mul(
        sub(mul(mul(di.beta, di.b), ej), mul(mul(dj.beta, dj.b), ei)), inv_denom
    )
    return ((a12, b12), (c12, d12))


def large_row_matrix(di: FlagData, dj: FlagData):
    """3x3 matrix whose nonsingularity is the large-row orthogonality test."""
    return (
        (1, 1, 1),
        (di.b, 0, dj.b),
        (di.d, di.beta, dj.d),
    )


def large_col_matrix(di: FlagData, dj: FlagData):
    """3x3 matrix whose nonsingularity is the large-column orthogonality test."""
    f = di.field
    return (
        (f.mul(di.b, di.delta), 0, f.mul(dj.b, dj.delta)),
        (f.mul(di.a, di.delta), f.inv(di.beta), f.mul(dj.a, dj.delta)),
        (1, 1, 1),
    )


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionResult:
    label: str
    indices: tuple[int, ...]
    status: str  # "PASS" | "FAIL" | "N/A"
    witness: str | None = None


@dataclass(frozen=True)
class ConditionReport:
    """Per-condition verdicts for one family, in deterministic label order."""

    s: int
    entries: tuple[ConditionResult, ...]

    @property
    def passed(self) -> bool:
        return all(e.status != "FAIL" for e in self.entries)

    def status(self, label: str, indices: tuple[int, ...] = ()) -> str:
        for e in self.entries:
            if e.label == label and e.indices == indices:
                return e.status
        raise KeyError((label, indices))

    def condition_entries(self) -> tuple[ConditionResult, ...]:
        """Entries for the tiered conditions, mutual-orthogonality ones aside."""
        return tuple(e for e in self.entries if e.label != "orth")

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            idx = ",".join(str(i) for i in e.indices) if e.indices else "-"
            line = f"{e.label} {idx} {e.status}"
            if e.witness:
                line += f" {e.witness}"
            lines.append(line)
        return "\n".join(lines)


def condition_index_tuples(label: str, n: int) -> list[tuple[int, ...]]:
    """Index tuples (1-based, over n family members) a condition ranges over."""
    if label == "i":
        return [(t,) for t in range(1, n + 1)]
    if label == "ii.a":
        return [(i, j) for i, j in combinations(range(1, n + 1), 2)]
    if label in ("ii.b", "ii.c"):
        return [(i, j) for i, j in permutations(range(1, n + 1), 2)]
    if label in ("iii.a", "iii.b", "iii.c"):
        return [
            (i, j, k)
            for i, j in combinations(range(1, n + 1), 2)
            for k in range(1, n + 1)
            if k not in (i, j)
        ]
    if label == "iv":
        out = []
        for quad in combinations(range(1, n + 1), 4):
            w, x, y, z = quad
            out.extend([(w, x, y, z), (w, y, x, z), (w, z, x, y)])
        return out
    raise ValueError(f"unknown condition label {label!r}")


def _report(s: int, orth_entries, verdicts) -> ConditionReport:
    """Assemble a report: verdicts maps label -> {indices: witness-or-None}."""
    n = s - 2
    entries = list(orth_entries)
    for label in CONDITION_LABELS:
        if s < _THRESHOLD[label]:
            entries.append(ConditionResult(label, (), "N/A"))
            continue
        by_tuple = verdicts[label]
        for idx in condition_index_tuples(label, n):
            witness = by_tuple[idx]
            if witness is None:
                entries.append(ConditionResult(label, idx, "PASS"))
            else:
                entries.append(ConditionResult(label, idx, "FAIL", witness))
    return ConditionReport(s, tuple(entries))


def _validate_family_size(n: int, s: int) -> None:
    if s != n + 2:
        raise ValueError(f"family of {n} members needs s = {n + 2}, got {s}")
    if s < 3:
        raise ValueError("family parameter s must be at least 3")


# -- algebraic checker --------------------------------------------------------


def check_algebraic(data, s: int) -> ConditionReport:
    """Evaluate the condition system on flag data alone.

    Mutual orthogonality (pairwise nonsingular matrix differences) is a
    precondition and is verified first; its verdicts appear under the label
    ``orth``.
    """
    data = list(data)
    n = len(data)
    _validate_family_size(n, s)
    f = data[0].field
    if any(d.field != f for d in data):
        raise ValueError("flag data lie over different fields")

    orth_entries = []
    for i, j in combinations(range(1, n + 1), 2):
        diff = mat_sub(f, data[i - 1].gamma, data[j - 1].gamma)
        if det(f, diff) == 0:
            raise NotMutuallyOrthogonal(
                f"members {i} and {j}: matrix difference is singular"
            )
        orth_entries.append(ConditionResult("orth", (i, j), "PASS"))

    flags = [d.flag() for d in data]
    radix_spaces = [fl.radix_space for fl in flags]
    symbol_spaces = [fl.symbol_space for fl in flags]
    fixed = fixed_subspaces(f)

    # Composite symbol spaces and their matrix data, by intersection; the
    # closed form is a cross-check where its hypotheses hold.
    inter: dict[tuple[int, int], Subspace] = {}
    gammas: dict[tuple[int, int], tuple | None] = {}
    for i, j in combinations(range(1, n + 1), 2):
        w = intersect(radix_spaces[i - 1], radix_spaces[j - 1])
        gm = subspace_gamma(w)
        try:
            closed = gamma_composite(data[i - 1], data[j - 1])
        except HypothesisViolated:
            closed = None
        if closed is not None and closed != gm:
            raise AssertionError(
                f"closed-form composite datum disagrees with intersection at {(i, j)}"
            )  # pragma: no cover
        inter[(i, j)] = w
        gammas[(i, j)] = gm

    row_cuts = {}
    col_cuts = {}
    if s >= 5:
        for k in range(1, n + 1):
            row_cuts[k] = intersect(radix_spaces[k - 1], fixed.top_large_row)
            col_cuts[k] = intersect(radix_spaces[k - 1], fixed.left_large_col)

    verdicts: dict[str, dict[tuple[int, ...], str | None]] = {}

    def _nonsingular(m, what: str) -> str | None:
        return None if det(f, m) != 0 else f"{what} is singular"

    verdicts["i"] = {}
    for (t,) in condition_index_tuples("i", n):
        # FlagData is validated at construction, so this re-states validity.
        d = data[t - 1]
        why = None
        if d.b == 0:
            why = "b is zero"
        elif d.beta == 0:
            why = "beta is zero"
        elif d.det == 0:
            why = "matrix datum is singular"
        verdicts["i"][(t,)] = why

    if s >= 4:
        verdicts["ii.a"] = {}
        for idx in condition_index_tuples("ii.a", n):
            gm = gammas[idx]
            if gm is None:
                why = "composite space has no matrix datum"
            elif det(f, gm) == 0:
                why = "composite matrix is singular"
            elif gm[0][1] == 0:
                why = "composite matrix has b = 0"
            else:
                why = None
            verdicts["ii.a"][idx] = why

        verdicts["ii.b"] = {}
        verdicts["ii.c"] = {}
        for i, j in condition_index_tuples("ii.b", n):
            di, dj = data[i - 1], data[j - 1]
            verdicts["ii.b"][(i, j)] = _nonsingular(
                large_row_matrix(di, dj), "large-row matrix"
            )
            verdicts["ii.c"][(i, j)] = _nonsingular(
                large_col_matrix(di, dj), "large-column matrix"
            )

    if s >= 5:
        verdicts["iii.a"] = {}
        verdicts["iii.b"] = {}
        verdicts["iii.c"] = {}
        for i, j, k in condition_index_tuples("iii.a", n):
            g_ij = inter[(i, j)]
            verdicts["iii.a"][(i, j, k)] = (
                None
                if trivial_intersection(g_ij, row_cuts[k])
                else "meets the top-large-row cut of member k"
            )
            verdicts["iii.b"][(i, j, k)] = (
                None
                if trivial_intersection(g_ij, col_cuts[k])
                else "meets the left-large-column cut of member k"
            )
            gm = gammas[(i, j)]
            if gm is not None:
                why = _nonsingular(
                    mat_sub(f, gm, data[k - 1].gamma), "composite-minus-member matrix"
                )
            else:
                why = (
                    None
                    if trivial_intersection(g_ij, symbol_spaces[k - 1])
                    else "composite space meets member k's symbol space"
                )
            verdicts["iii.c"][(i, j, k)] = why

    if s >= 6:
        verdicts["iv"] = {}
        for i, j, k, l in condition_index_tuples("iv", n):
            gm1, gm2 = gammas[(i, j)], gammas[(k, l)]
            if gm1 is not None and gm2 is not None:
                why = _nonsingular(mat_sub(f, gm1, gm2), "composite difference matrix")
            else:
                why = (
                    None
                    if trivial_intersection(inter[(i, j)], inter[(k, l)])
                    else "the two composite spaces meet"
                )
            verdicts["iv"][(i, j, k, l)] = why

    return _report(s, orth_entries, verdicts)


# -- combinatorial checker ----------------------------------------------------


def check_combinatorial(grids, s: int) -> ConditionReport:
    """Evaluate the condition system on grids by exhaustive enumeration.

    The grids must be mutually orthogonal sudoku solutions; that precondition
    is verified first and its verdicts appear under the label ``orth``.
    """
    grids = list(grids)
    n = len(grids)
    _validate_family_size(n, s)
    for other in grids[1:]:
        _check_shapes(grids[0], other)

    for t, grid in enumerate(grids, start=1):
        why = _sudoku_violation(grid)
        if why is not None:
            raise NotMutuallyOrthogonal(f"member {t} is not a sudoku solution: {why}")
    orth_entries = []
    for i, j in combinations(range(1, n + 1), 2):
        why = _orthogonality_violation(grids[i - 1], grids[j - 1])
        if why is not None:
            raise NotMutuallyOrthogonal(f"members {i} and {j}: {why}")
        orth_entries.append(ConditionResult("orth", (i, j), "PASS"))

    radixes = [radix(g) for g in grids]
    composites = {
        (i, j): composite(radixes[i - 1], radixes[j - 1])
        for i, j in combinations(range(1, n + 1), 2)
    }

    verdicts: dict[str, dict[tuple[int, ...], str | None]] = {}

    verdicts["i"] = {
        (t,): _subsquares_latin_violation(radixes[t - 1])
        for (t,) in condition_index_tuples("i", n)
    }

    if s >= 4:
        verdicts["ii.a"] = {
            idx: _sudoku_violation(composites[idx])
            for idx in condition_index_tuples("ii.a", n)
        }
        verdicts["ii.b"] = {
            (i, j): _large_rows_violation(radixes[i - 1], grids[j - 1])
            for i, j in condition_index_tuples("ii.b", n)
        }
        verdicts["ii.c"] = {
            (i, j): _large_cols_violation(radixes[i - 1], grids[j - 1])
            for i, j in condition_index_tuples("ii.c", n)
        }

    if s >= 5:
        verdicts["iii.a"] = {}
        verdicts["iii.b"] = {}
        verdicts["iii.c"] = {}
        for i, j, k in condition_index_tuples("iii.a", n):
            n_ij = composites[(i, j)]
            verdicts["iii.a"][(i, j, k)] = _large_rows_violation(n_ij, radixes[k - 1])
            verdicts["iii.b"][(i, j, k)] = _large_cols_violation(n_ij, radixes[k - 1])
            verdicts["iii.c"][(i, j, k)] = _orthogonality_violation(n_ij, grids[k - 1])

    if s >= 6:
        verdicts["iv"] = {
            (i, j, k, l): _orthogonality_violation(
                composites[(i, j)], composites[(k, l)]
            )
            for i, j, k, l in condition_index_tuples("iv", n)
        }

    return _report(s, orth_entries, verdicts)
