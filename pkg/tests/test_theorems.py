import itertools

import numpy as np
import pytest

from pointplane import (AxiomsNotSatisfiedError, IncidenceStructure, all_lines,
                        check_all_theorems, check_meet, check_proper_pencil,
                        check_unique_plane, check_vy_axioms,
                        check_vy_characterization, dualize, line_through_points,
                        replay_theorem)
from pointplane.clauses import TheoremReport, brute_force
from pointplane.theorems import THEOREM_CLAUSES, THEOREM_ITEMS, VY_ITEMS

from conftest import enc, encs, mutants, random_structure

FORCED = dict(force=True)


def _all_reports(s, **kw):
    return check_all_theorems(s, **kw) + check_vy_axioms(s, **kw)


def test_unique_plane_example(pg2):
    assert pg2.perp_points(encs(1, 2, 4)) == encs(8)
    assert pg2.perp_points(encs(1, 2, 3)) == encs(4, 8, 12)
    pt, pl = check_unique_plane(pg2)
    assert pt.passed and pl.passed
    assert pt.checked_cases == 455 - 35 == 420
    assert pt.stats["collinear_perp_sizes"] == [3]


def test_meet_pg2(pg2):
    r = check_meet(pg2)
    assert r.passed and r.checked_cases == 595


def test_proper_pencil(pg2, pg3):
    t3, t3d, lp, lpd = check_proper_pencil(pg2)
    assert all(r.passed for r in (t3, t3d, lp, lpd))
    assert t3.checked_cases == 15 * 21
    assert lp.checked_cases == 35 * 12
    t3, *_ = check_proper_pencil(pg3)
    assert t3.passed and t3.checked_cases == 40 * 78


def test_line_meets_plane_in_one_point(pg2):
    line = line_through_points(pg2, enc(1), enc(2))
    for plane in set(range(15)) - line.plane_pencil:
        assert len(line.point_pencil & pg2.points_on(plane)) == 1


def test_vy_characterization_example(pg2):
    line_ab = line_through_points(pg2, enc(1), enc(2))
    swept = set()
    for d in line_ab.point_pencil:
        swept |= line_through_points(pg2, enc(4), d).point_pencil
    assert swept == pg2.points_on(enc(8)) and len(swept) == 7
    pt, pl = check_vy_characterization(pg2)
    assert pt.passed and pl.passed
    assert pt.checked_cases == 105 * 12


def test_vy_characterization_pg3_planes_have_13_points(pg3):
    pt, _ = check_vy_characterization(pg3)
    assert pt.passed
    assert set(pg3.matrix.sum(axis=0)) == {13}


@pytest.mark.parametrize("q, e0", [(2, 3), (3, 4)])
def test_vy_axioms_pass(q, e0, request):
    s = request.getfixturevalue(f"pg{q}")
    reports = check_vy_axioms(s)
    assert [r.item for r in reports] == list(VY_ITEMS)
    assert all(r.passed for r in reports)
    assert reports[3].stats["min_points"] == e0


def test_vy_a3_case_count(pg2):
    # 105 base pairs, 12 apexes off each base line, 3*3 - 1 choices of D != E
    a3 = check_vy_axioms(pg2)[2]
    assert a3.checked_cases == 105 * 12 * 8


def test_theorems_require_axioms():
    s = IncidenceStructure([[1, 1], [1, 0]])
    with pytest.raises(AxiomsNotSatisfiedError) as info:
        check_unique_plane(s)
    assert any(not r.passed for r in info.value.reports)
    check_unique_plane(s, force=True)


def test_e2_fails_alone_when_forced():
    # two points with no common plane span "every point"; no plane is full
    s = IncidenceStructure([[1, 0], [0, 1]])
    reports = {r.item: r for r in check_vy_axioms(s, force=True)}
    assert not reports["VY_E2"].passed
    assert reports["VY_E3"].passed
    assert replay_theorem(s, reports["VY_E2"])


def test_e2_follows_from_e3_on_models(pg2, pg3):
    for s in (pg2, pg3, dualize(pg3)):
        reports = {r.item: r for r in check_vy_axioms(s)}
        assert reports["VY_E3"].passed and reports["VY_E2"].passed


def test_duality_transport(pg2):
    for s in [pg2] + [m for _, _, m in mutants(pg2, 6, seed=21)]:
        mine = {r.item: r for r in check_all_theorems(s, **FORCED)}
        theirs = {r.item: r for r in check_all_theorems(dualize(s), **FORCED)}
        for a, b in [("T1_pt", "T1_pl"), ("T3_pt", "T3_pl"),
                     ("LP_pt", "LP_pl"), ("VYC_pt", "VYC_pl")]:
            for x, y in [(a, b), (b, a)]:
                assert (mine[x].passed, mine[x].witness, mine[x].checked_cases) == \
                    (theirs[y].passed, theirs[y].witness, theirs[y].checked_cases)
        assert (mine["T2"].passed, mine["T2"].checked_cases) == \
            (theirs["T2"].passed, theirs["T2"].checked_cases)


def _assert_fast_matches_brute(s, skip=()):
    for r in _all_reports(s, **FORCED):
        if r.item in skip:
            continue
        slow = brute_force(THEOREM_CLAUSES[r.item], s, TheoremReport)
        assert (r.item, r.passed, r.witness, r.checked_cases) == \
            (slow.item, slow.passed, slow.witness, slow.checked_cases), r.item


def test_fast_paths_match_brute_force_on_random():
    rng = np.random.default_rng(17)
    for _ in range(40):
        n, m = int(rng.integers(2, 7)), int(rng.integers(2, 7))
        _assert_fast_matches_brute(random_structure(rng, n, m, rng.uniform(0.3, 0.9)))


def test_fast_paths_match_brute_force_on_pg2_mutants(pg2):
    # VY_A3 brute force is 15**5 tuples; it is covered on the random structures
    for _, _, s in mutants(pg2, 3, seed=8):
        _assert_fast_matches_brute(s, skip={"VY_A3"})


def test_fast_paths_match_brute_force_on_pg2(pg2):
    _assert_fast_matches_brute(pg2, skip={"VY_A3"})


def test_forced_failures_replay(pg2):
    failing = 0
    for _, _, s in mutants(pg2, 20, seed=13):
        for r in _all_reports(s, **FORCED):
            if not r.passed:
                failing += 1
                assert replay_theorem(s, r), r
    assert failing > 0


def test_sampled_theorems(pg3):
    reports = _all_reports(pg3, sample=200, seed=3)
    assert all(r.passed and r.sampled for r in reports)
    again = _all_reports(pg3, sample=200, seed=3)
    assert [r.line() for r in reports] == [r.line() for r in again]


def test_theorem_item_order(pg2):
    assert tuple(r.item for r in check_all_theorems(pg2)) == THEOREM_ITEMS


def test_lines_cover_each_pair_once(pg3):
    lines = all_lines(pg3)
    for a, b in itertools.combinations(range(pg3.n_points), 2):
        assert sum(a in ln.point_pencil and b in ln.point_pencil for ln in lines) == 1
