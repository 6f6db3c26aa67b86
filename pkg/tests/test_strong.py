"""Condition checkers and the closed-form composite datum."""

from __future__ import annotations

import itertools
import random

import pytest

import fixtures as fx
from sudoku_ooa import (
    FlagData,
    HypothesisViolated,
    NotMutuallyOrthogonal,
    check_algebraic,
    check_combinatorial,
    condition_index_tuples,
    det,
    fixed_subspaces,
    gamma_composite,
    generate,
    intersect,
    make_field,
    subspace_gamma,
    substrong_family,
)


def pair3_data():
    f = make_field(3)
    return [FlagData(f, 2, 1, 0, 2, 1), FlagData(f, 1, 1, 0, 1, 2)]


def test_gamma_composite_example_gf5():
    f = make_field(5)
    d1 = FlagData(f, 1, 1, 0, 1, 1)  # member 1 of the s-family over S
    d2 = FlagData(f, 2, 1, 0, 3, 2)
    gm = gamma_composite(d1, d2)
    assert gm == ((2, 4), (0, 1))
    assert det(f, gm) == f.mul(1, 2)


def test_gamma_composite_constant_for_substrong_family():
    for q in (3, 5):
        fam = substrong_family(q)
        f = fam.field
        alpha = fam.alpha
        one_minus = f.sub(1, alpha)
        expected = (
            (0, f.inv(one_minus)),
            (f.mul(f.inv(alpha), one_minus), 0),
        )
        for d1, d2 in itertools.combinations(fam.data, 2):
            assert gamma_composite(d1, d2) == expected


def test_gamma_composite_hypothesis_violations():
    f = make_field(5)
    d1 = FlagData(f, 1, 1, 0, 1, 1)
    with pytest.raises(HypothesisViolated, match="beta"):
        gamma_composite(d1, FlagData(f, 2, 1, 0, 3, 1))
    # b_i(d_j-beta_j) = b_j(d_i-beta_i): take d = beta on both sides.
    with pytest.raises(HypothesisViolated, match="zero"):
        gamma_composite(FlagData(f, 1, 1, 0, 2, 2), FlagData(f, 1, 1, 0, 3, 3))


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_gamma_composite_matches_intersection(q):
    f = make_field(q)
    rng = random.Random(q * 101)
    done = 0
    while done < 100:
        d1 = fx.random_flag_data(f, rng)
        d2 = fx.random_flag_data(f, rng)
        try:
            closed = gamma_composite(d1, d2)
        except HypothesisViolated:
            continue
        meet = intersect(d1.flag().radix_space, d2.flag().radix_space)
        assert meet.dim == 2
        assert subspace_gamma(meet) == closed
        done += 1


def test_fixed_subspaces_shape():
    f = make_field(3)
    fixed = fixed_subspaces(f)
    assert fixed.top_large_row.dim == 3
    assert fixed.left_large_col.dim == 3
    assert intersect(fixed.top_large_row, fixed.left_large_col).dim == 2


def test_check_algebraic_pair3_all_pass():
    report = check_algebraic(pair3_data(), 4)
    assert report.passed
    assert report.status("ii.a", (1, 2)) == "PASS"
    assert report.status("iii.a") == "N/A"
    assert report.status("iv") == "N/A"


def test_pair3_intersection_datum():
    d1, d2 = pair3_data()
    meet = intersect(d1.flag().radix_space, d2.flag().radix_space)
    assert meet.dim == 2
    assert subspace_gamma(meet) == ((0, 2), (1, 0))
    assert gamma_composite(d1, d2) == ((0, 2), (1, 0))


def test_check_algebraic_big_family_gf7():
    f = make_field(7)
    data = [FlagData(f, i, 1, 0, f.inv(i), i) for i in (1, 3, 5)]
    report = check_algebraic(data, 5)
    assert report.passed
    # det(composite(i,j) - member k) follows the (i+j)(k-i)(j-k)/(k(1+ij)) form.
    by_value = {1: data[0], 3: data[1], 5: data[2]}
    for i, j in itertools.combinations((1, 3, 5), 2):
        gm = gamma_composite(by_value[i], by_value[j])
        for k in (1, 3, 5):
            if k in (i, j):
                continue
            diff = tuple(
                tuple(f.sub(x, y) for x, y in zip(ra, rb))
                for ra, rb in zip(gm, by_value[k].gamma)
            )
            num = f.mul(f.mul(f.add(i, j), f.sub(k, i)), f.sub(j, k))
            den = f.mul(k, f.add(1, f.mul(i, j)))
            assert det(f, diff) == f.div(num, den)


def test_check_algebraic_single_datum():
    f = make_field(4)
    report = check_algebraic([FlagData(f, 1, 1, 0, 1, 1)], 3)
    assert report.passed
    assert report.status("i", (1,)) == "PASS"
    for label in ("ii.a", "ii.b", "ii.c", "iii.a", "iii.b", "iii.c", "iv"):
        assert report.status(label) == "N/A"


def test_check_algebraic_not_mutually_orthogonal():
    f = make_field(3)
    d = FlagData(f, 1, 1, 0, 1, 1)
    with pytest.raises(NotMutuallyOrthogonal, match="1 and 2"):
        check_algebraic([d, FlagData(f, 1, 1, 0, 1, 2)], 4)


def test_check_combinatorial_pair3():
    grids = [generate(d.flag()) for d in pair3_data()]
    report = check_combinatorial(grids, 4)
    assert report.passed


def test_check_combinatorial_sa42_pair_fails_condition_i():
    report = check_combinatorial([fx.SA42_M1, fx.SA42_M2], 4)
    assert not report.passed
    assert report.status("i", (1,)) == "FAIL"
    assert report.status("i", (2,)) == "FAIL"
    # Failing entries carry a locating witness.
    for entry in report.condition_entries():
        if entry.status == "FAIL":
            assert entry.witness
    pair_fails = [
        e for e in report.condition_entries()
        if e.status == "FAIL" and e.label in ("ii.a", "ii.b", "ii.c")
    ]
    if pair_fails:
        assert any("cell" in e.witness or "subsquare" in e.witness for e in pair_fails)


def test_check_combinatorial_single_gf2():
    f = make_field(2)
    grid = generate(FlagData(f, 1, 1, 0, 1, 1).flag())
    report = check_combinatorial([grid], 3)
    assert report.passed


def test_check_combinatorial_rejects_non_sudoku():
    rows = [list(r) for r in fx.PAIR3_M1.rows]
    rows[0][0], rows[0][1] = rows[0][1], rows[0][0]
    with pytest.raises(NotMutuallyOrthogonal, match="not a sudoku solution"):
        check_combinatorial([fx.grid(3, rows)], 3)


def test_check_combinatorial_rejects_non_orthogonal_pair():
    with pytest.raises(NotMutuallyOrthogonal, match="1 and 2"):
        check_combinatorial([fx.PAIR3_M1, fx.PAIR3_M1], 4)


def test_check_combinatorial_rejects_shape_mismatch():
    from sudoku_ooa import DimensionMismatch

    with pytest.raises(DimensionMismatch):
        check_combinatorial([fx.PAIR3_M1, fx.SA42_M1], 4)


def agreement_case(field, data, s):
    """Both checkers agree verdict-for-verdict on one family."""
    alg = check_algebraic(data, s)
    comb = check_combinatorial([generate(d.flag()) for d in data], s)
    assert [(e.label, e.indices, e.status) for e in alg.entries] == [
        (e.label, e.indices, e.status) for e in comb.entries
    ]
    return alg, comb


@pytest.mark.parametrize("q", [3, 4, 5])
def test_checker_agreement_random_families(q):
    f = make_field(q)
    rng = random.Random(977 * q)
    found = 0
    for size in itertools.cycle((1, 2, 3, 4)):
        data = fx.random_orthogonal_family(f, size, rng, tries=60)
        if data is None:
            continue
        agreement_case(f, data, size + 2)
        found += 1
        if found >= 12:
            break


def test_checker_agreement_without_composite_datum():
    # Members 1 and 2 share (d-beta)/b, so their composite space has no
    # matrix datum; conditions iii.c and iv must still agree through the
    # intersection fallback.
    f = make_field(3)
    data = [
        FlagData(f, 0, 1, 1, 1, 1),
        FlagData(f, 1, 1, 0, 2, 2),
        FlagData(f, 0, 2, 2, 1, 1),
        FlagData(f, 1, 2, 1, 0, 1),
    ]
    with pytest.raises(HypothesisViolated):
        gamma_composite(data[0], data[1])
    meet = intersect(data[0].flag().radix_space, data[1].flag().radix_space)
    assert meet.dim == 2
    assert subspace_gamma(meet) is None
    for size, s in ((3, 5), (4, 6)):
        alg, comb = agreement_case(f, data[:size], s)
        assert alg.status("ii.a", (1, 2)) == "FAIL"
        assert not alg.passed


def test_labeling_invariance_of_combinatorial_checker():
    rng = random.Random(31)
    grids = [generate(d.flag()) for d in pair3_data()]
    base = check_combinatorial(grids, 4)
    for _ in range(5):
        relabeled = [
            fx.relabel(g, fx.random_radix_preserving_bijection(3, rng)) for g in grids
        ]
        report = check_combinatorial(relabeled, 4)
        assert [(e.label, e.indices, e.status) for e in report.entries] == [
            (e.label, e.indices, e.status) for e in base.entries
        ]
    # Also on a family that fails a condition.
    fail_base = check_combinatorial([fx.SA42_M1, fx.SA42_M2], 4)
    for _ in range(5):
        relabeled = [
            fx.relabel(g, fx.random_radix_preserving_bijection(2, rng))
            for g in (fx.SA42_M1, fx.SA42_M2)
        ]
        report = check_combinatorial(relabeled, 4)
        assert [(e.label, e.indices, e.status) for e in report.entries] == [
            (e.label, e.indices, e.status) for e in fail_base.entries
        ]


def test_condition_index_tuples_counts():
    assert condition_index_tuples("i", 3) == [(1,), (2,), (3,)]
    assert condition_index_tuples("ii.a", 3) == [(1, 2), (1, 3), (2, 3)]
    assert len(condition_index_tuples("ii.b", 3)) == 6
    assert condition_index_tuples("iii.c", 3) == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    assert condition_index_tuples("iv", 4) == [(1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)]


def test_report_serialization_format():
    report = check_algebraic(pair3_data(), 4)
    lines = report.to_text().splitlines()
    assert lines[0] == "orth 1,2 PASS"
    assert "i 1 PASS" in lines
    assert "iii.a - N/A" in lines
    for line in lines:
        label, indices, status = line.split()[:3]
        assert status in ("PASS", "FAIL", "N/A")
