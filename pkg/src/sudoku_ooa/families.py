"""Explicit strongly/substrongly orthogonal families of flag data.

Two constructions are provided: a size q-1 family that satisfies the s <= 4
tiers of the condition system (substrong), and a family over a subset S of
the multiplicative group satisfying all tiers whenever S avoids pairs with
i + j = 0 or i*j = -1 (big).  ``construct_family`` dispatches between them
for a requested array parameter s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf import Field, find_generator, make_field
from .strong import FlagData


class InvalidS(ValueError):
    """The index set for the big construction violates a pairwise condition."""


class SOutOfRange(ValueError):
    """No construction is available for the requested (q, s)."""


@dataclass(frozen=True)
class FamilySpec:
    """A constructed family: its parameters and the s-2 flag data."""

    field: Field
    s: int
    method: str  # "substrong" | "big"
    alpha: int | None
    members: tuple[int, ...] | None
    data: tuple[FlagData, ...]

    def __post_init__(self):
        if self.s != len(self.data) + 2:
            raise ValueError("family size must equal s - 2")

    @property
    def q(self) -> int:
        return self.field.q


def substrong_family(q: int) -> FamilySpec:
    """Size q-1 family passing the s <= 4 condition tiers.

    For q = 2 the single datum has matrix (1 1; 0 1) and beta = 1.  For
    q > 2, alpha is the smallest element outside {0, 1} and member i in F^x
    has matrix ((alpha*i)^-1, 1; 0, alpha*i) with beta = i, ordered by i.
    """
    f = make_field(q)
    if q == 2:
        data = (FlagData(f, 1, 1, 0, 1, 1),)
        return FamilySpec(f, 3, "substrong", None, None, data)
    alpha = 2
    data = tuple(
        FlagData(f, f.inv(f.mul(alpha, i)), 1, 0, f.mul(alpha, i), i)
        for i in range(1, q)
    )
    return FamilySpec(f, q + 1, "substrong", alpha, None, data)


def big_family(q: int, members) -> FamilySpec:
    """Family over S with matrices (i, 1; 0, i^-1) and beta = i for i in S.

    S must avoid 0 and every distinct pair must have i + j != 0 and
    i*j != -1.
    """
    f = make_field(q)
    s_sorted = tuple(sorted(set(int(i) for i in members)))
    minus_one = f.neg(1)
    for i in s_sorted:
        if not 0 < i < q:
            raise InvalidS(f"{i} is not a nonzero element of the field of order {q}")
    for i, j in combinations(s_sorted, 2):
        if f.add(i, j) == 0:
            raise InvalidS(f"pair ({i}, {j}): i + j = 0")
        if f.mul(i, j) == minus_one:
            raise InvalidS(f"pair ({i}, {j}): i * j = -1")
    data = tuple(FlagData(f, i, 1, 0, f.inv(i), i) for i in s_sorted)
    return FamilySpec(f, len(data) + 2, "big", None, s_sorted, data)


def select_S(q: int) -> tuple[int, ...]:
    """Deterministic maximal index set for the big construction.

    Even q: 1 together with the smaller member of every inverse pair, giving
    q/2 elements.  Odd q: powers alpha^k of the smallest generator for k in
    {0, +-1, ..., +-n} when q - 1 = 4n + 2, or {0, +-1, ..., +-(n-1), n} when
    q - 1 = 4n, giving (q-1)/2 elements.  The output is checked against the
    pairwise conditions rather than assumed to satisfy them.
    """
    if q < 4:
        raise SOutOfRange(f"the big construction needs q >= 4, got {q}")
    f = make_field(q)
    if q % 2 == 0:
        chosen = [1]
        for i in range(2, q):
            if i <= f.inv(i):
                chosen.append(i)
    else:
        alpha = find_generator(f)
        m = q - 1
        if m % 4 == 2:
            half = (m - 2) // 4
            exponents = {0} | {e for t in range(1, half + 1) for e in (t, m - t)}
        else:
            half = m // 4
            exponents = {0, half} | {
                e for t in range(1, half) for e in (t, m - t)
            }
        chosen = [f.pow(alpha, e) for e in exponents]
    out = tuple(sorted(chosen))
    big_family(q, out)  # verifies the pairwise conditions
    return out


def _truncate(fam: FamilySpec, size: int) -> FamilySpec:
    data = fam.data[:size]
    members = fam.members[:size] if fam.members is not None else None
    return FamilySpec(fam.field, size + 2, fam.method, fam.alpha, members, data)


def construct_family(q: int, s: int) -> FamilySpec:
    """Family of s-2 flag data whose sudoku array is an OOA(4,s,2,q).

    Uses the substrong construction for s <= 4 and a prefix of select_S for
    larger s; raises SOutOfRange outside the guaranteed range (s = 4 with
    q = 2 is impossible, larger s needs enough elements in S).
    """
    make_field(q)  # raises NotPrimePower early
    if s < 3:
        raise SOutOfRange(f"s must be at least 3, got {s}")
    if s == 3:
        return _truncate(substrong_family(q), 1)
    if s == 4:
        if q == 2:
            raise SOutOfRange(
                "an OOA(4,4,2,2) does not exist; the largest s for q = 2 is 3"
            )
        return _truncate(substrong_family(q), 2)
    if q < 4:
        raise SOutOfRange(f"no construction for q = {q} reaches s = {s}")
    members = select_S(q)
    if s - 2 > len(members):
        raise SOutOfRange(
            f"no construction for q = {q} reaches s = {s}; the largest is"
            f" {len(members) + 2}"
        )
    return big_family(q, members[: s - 2])


def max_guaranteed_s(q: int) -> int:
    """Largest s the constructions guarantee: floor((q+4)/2), but 3 for q=2."""
    make_field(q)
    if q == 2:
        return 3
    return (q + 4) // 2
