"""Model checks for the theorems that follow from the point/plane axioms.

Items and their quantifier domains (``checked_cases`` is the domain size).
A line is identified in witnesses by its label, the least point pair
spanning it; ``cl{A,B}`` is the pencil ``{A,B}^perp^perp``.

``T1_pt``   A < B < C non-collinear: exactly one plane through A, B, C.
``T2``      distinct lines l < m: they share a point iff they share a plane,
            and then exactly one of each.
``T3_pt``   plane alpha, B < C on alpha: cl{B,C} is a proper subset of alpha's points.
``LP_pt``   line l, plane alpha not containing l: exactly one common point.
``VYC_pt``  A < B, C off cl{A,B}: the plane through A, B, C has exactly the
            points of the lines CD with D on AB.
``VY_A1``   A < B: some line contains both.
``VY_A2``   A < B: at most one line contains both.
``VY_A3``   A < B, C off AB, D on BC, E on CA, D != E: DE meets AB.
``VY_E0``   every line has at least three points.
``VY_E1``   some line exists.
``VY_E2``   no line contains every point.
``VY_E3``   no plane contains every point.
``VY_E3p``  alpha < beta: the pencil of alpha, beta is a line.

``_pl`` variants are the ``_pt`` items evaluated on the dual structure.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Optional

import numpy as np

from .axioms import check_all_axioms
from .clauses import (DEFAULT_SIZE_LIMIT, PLANE, POINT, Clause, Report,
                      TheoremReport, guard_size, sampled)
from .errors import AxiomsNotSatisfiedError, InconsistentStructureError
from .incidence import IncidenceStructure, bits
from .lines import LineIndex, all_lines, line_index

__all__ = [
    "TheoremReport",
    "THEOREM_CLAUSES",
    "THEOREM_ITEMS",
    "VY_ITEMS",
    "check_unique_plane",
    "check_meet",
    "check_proper_pencil",
    "check_vy_characterization",
    "check_vy_axioms",
    "check_all_theorems",
    "replay_theorem",
]


# -- primitive helpers for the clause predicates ---------------------------------

def _cl(s: IncidenceStructure, pts) -> frozenset:
    return s.perp_planes(s.perp_points(pts))


@lru_cache(maxsize=8192)
def _label(s: IncidenceStructure, pencil: frozenset) -> Optional[tuple[int, int]]:
    n = s.n_points
    for a in range(n):
        for b in range(a + 1, n):
            if _cl(s, (a, b)) == pencil:
                return (a, b)
    return None


def _is_label(s, a, b) -> bool:
    return a < b and _label(s, _cl(s, (a, b))) == (a, b)


@lru_cache(maxsize=64)
def _pencils(s: IncidenceStructure) -> frozenset:
    return frozenset(line.point_pencil for line in all_lines(s, strict=False))


# -- clause predicates ------------------------------------------------------------

def _t1_domain(s, w):
    a, b, c = w
    return a < b < c and c not in _cl(s, (a, b))


def _t1_holds(s, w):
    return len(s.perp_points(w)) == 1


def _t2_domain(s, w):
    a, b, c, d = w
    return ((a, b) < (c, d) and _is_label(s, a, b) and _is_label(s, c, d)
            and _cl(s, (a, b)) != _cl(s, (c, d)))


def _t2_holds(s, w):
    a, b, c, d = w
    shared_pts = _cl(s, (a, b)) & _cl(s, (c, d))
    shared_pls = s.perp_points((a, b)) & s.perp_points((c, d))
    if bool(shared_pts) != bool(shared_pls):
        return False
    return not shared_pts or (len(shared_pts) == 1 and len(shared_pls) == 1)


def _t3_domain(s, w):
    alpha, b, c = w
    on = s.points_on(alpha)
    return b < c and b in on and c in on


def _t3_holds(s, w):
    alpha, b, c = w
    return _cl(s, (b, c)) < s.points_on(alpha)


def _lp_domain(s, w):
    a, b, alpha = w
    return _is_label(s, a, b) and alpha not in s.perp_points((a, b))


def _lp_holds(s, w):
    a, b, alpha = w
    return len(_cl(s, (a, b)) & s.points_on(alpha)) == 1


def _vyc_domain(s, w):
    a, b, c = w
    return a < b and c not in _cl(s, (a, b))


def _vyc_holds(s, w):
    a, b, c = w
    planes = s.perp_points(w)
    if len(planes) != 1:
        return False
    (plane,) = planes
    swept = set()
    for d in _cl(s, (a, b)):
        swept |= _cl(s, (c, d))
    return s.points_on(plane) == swept


def _pair_domain(s, w):
    return w[0] < w[1]


def _vy_a1_holds(s, w):
    return any(set(w) <= p for p in _pencils(s))


def _vy_a2_holds(s, w):
    return sum(set(w) <= p for p in _pencils(s)) <= 1


def _vy_a3_domain(s, w):
    a, b, c, d, e = w
    return (a < b and c not in _cl(s, (a, b)) and d in _cl(s, (b, c))
            and e in _cl(s, (c, a)) and d != e)


def _vy_a3_holds(s, w):
    a, b, c, d, e = w
    return bool(_cl(s, (d, e)) & _cl(s, (a, b)))


def _label_domain(s, w):
    return _is_label(s, *w)


def _vy_e3p_holds(s, w):
    return s.perp_planes(w) in _pencils(s)


_always = lambda s, w: True  # noqa: E731

_T1 = Clause("T1_pt", (POINT,) * 3, _t1_domain, _t1_holds)
_T3 = Clause("T3_pt", (PLANE, POINT, POINT), _t3_domain, _t3_holds)
_LP = Clause("LP_pt", (POINT, POINT, PLANE), _lp_domain, _lp_holds)
_VYC = Clause("VYC_pt", (POINT,) * 3, _vyc_domain, _vyc_holds)

THEOREM_CLAUSES: dict[str, Clause] = {
    "T1_pt": _T1, "T1_pl": _T1.dual("T1_pl"),
    "T2": Clause("T2", (POINT,) * 4, _t2_domain, _t2_holds),
    "T3_pt": _T3, "T3_pl": _T3.dual("T3_pl"),
    "LP_pt": _LP, "LP_pl": _LP.dual("LP_pl"),
    "VYC_pt": _VYC, "VYC_pl": _VYC.dual("VYC_pl"),
    "VY_A1": Clause("VY_A1", (POINT,) * 2, _pair_domain, _vy_a1_holds),
    "VY_A2": Clause("VY_A2", (POINT,) * 2, _pair_domain, _vy_a2_holds),
    "VY_A3": Clause("VY_A3", (POINT,) * 5, _vy_a3_domain, _vy_a3_holds),
    "VY_E0": Clause("VY_E0", (POINT,) * 2, _label_domain,
                    lambda s, w: len(_cl(s, w)) >= 3),
    "VY_E1": Clause("VY_E1", (), _always, lambda s, w: len(_pencils(s)) > 0),
    "VY_E2": Clause("VY_E2", (POINT,) * 2, _label_domain,
                    lambda s, w: len(_cl(s, w)) < s.n_points),
    "VY_E3": Clause("VY_E3", (PLANE,), _always,
                    lambda s, w: len(s.points_on(w[0])) < s.n_points),
    "VY_E3p": Clause("VY_E3p", (PLANE,) * 2, _pair_domain, _vy_e3p_holds),
}
THEOREM_ITEMS = ("T1_pt", "T1_pl", "T2", "T3_pt", "T3_pl", "LP_pt", "LP_pl",
                 "VYC_pt", "VYC_pl")
VY_ITEMS = ("VY_A1", "VY_A2", "VY_A3", "VY_E0", "VY_E1", "VY_E2", "VY_E3", "VY_E3p")


# -- vectorized exhaustive paths ---------------------------------------------------

def _report(name, cases, witness, **stats):
    return TheoremReport(name, witness is None, witness, int(cases), stats=stats)


def _t1_fast(t: IncidenceStructure, name: str) -> TheoremReport:
    n = t.n_points
    m = t.matrix.astype(np.float32)
    cases = 0
    witness = None
    collinear_sizes: set[int] = set()
    for a in range(n - 2):
        tail = m[a:]
        common = (tail * m[a]) @ tail.T       # [i, j] = |{a, a+i, a+j}^perp|
        i, j = np.triu_indices(n - a, 1)
        keep = i >= 1
        i, j = i[keep], j[keep]
        triple = common[i, j]
        pair = common[i, i]
        noncol = triple != pair
        collinear_sizes.update(int(x) for x in np.unique(triple[~noncol]))
        cases += int(noncol.sum())
        if witness is None:
            bad = np.flatnonzero(noncol & (triple != 1))
            if bad.size:
                k = bad[0]
                witness = (a, a + int(i[k]), a + int(j[k]))
    return _report(name, cases, witness, collinear_perp_sizes=sorted(collinear_sizes))


def _t2_fast(t: IncidenceStructure, name: str) -> TheoremReport:
    idx = line_index(t, False)
    L = len(idx)
    p = idx.point_matrix().astype(np.float32)
    q = idx.plane_matrix().astype(np.float32)
    cp, cq = p @ p.T, q @ q.T
    i, j = np.triu_indices(L, 1)
    sp, sq = cp[i, j], cq[i, j]
    bad = np.flatnonzero(((sp > 0) != (sq > 0)) | ((sp > 0) & ((sp != 1) | (sq != 1))))
    witness = None
    if bad.size:
        k = bad[0]
        witness = idx.labels[i[k]] + idx.labels[j[k]]
    return _report(name, i.size, witness)


def _t3_fast(t: IncidenceStructure, name: str) -> TheoremReport:
    rows = t.row_masks
    cases = 0
    witness = None
    for alpha, col in enumerate(t.col_masks):
        pts = bits(col)
        cases += comb(len(pts), 2)
        if witness is not None:
            continue
        for x, b in enumerate(pts):
            for c in pts[x + 1:]:
                pencil = t.closure_of_plane_mask(rows[b] & rows[c])
                if pencil & ~col or pencil == col:
                    witness = (alpha, b, c)
                    break
            if witness is not None:
                break
    return _report(name, cases, witness)


def _lp_fast(t: IncidenceStructure, name: str) -> TheoremReport:
    idx = line_index(t, False)
    p = idx.point_matrix().astype(np.float32)
    off = ~idx.plane_matrix()
    counts = p @ t.matrix.astype(np.float32)
    bad = np.argwhere(off & (counts != 1))
    witness = None
    if bad.size:
        li, alpha = bad[0]
        witness = idx.labels[li] + (int(alpha),)
    return _report(name, off.sum(), witness)


def _spanning_pairs(idx: LineIndex) -> np.ndarray:
    n = idx.structure.n_points
    ids = idx.pair_line[np.triu_indices(n, 1)]
    return np.bincount(ids, minlength=len(idx))


def _vyc_fast(t: IncidenceStructure, name: str) -> TheoremReport:
    idx = line_index(t, False)
    rows, cols = t.row_masks, t.col_masks
    pair_line = idx.pair_line
    line_pts = idx.point_masks
    spans = _spanning_pairs(idx)
    cases = 0
    witness = None
    for li, (pts, pls) in enumerate(zip(idx.point_masks, idx.plane_masks)):
        base = bits(pts)
        off = [c for c in range(t.n_points) if not pts >> c & 1]
        cases += int(spans[li]) * len(off)
        if witness is not None:
            continue
        for c in off:
            through = pls & rows[c]
            ok = through.bit_count() == 1
            if ok:
                swept = 0
                for d in base:
                    swept |= line_pts[pair_line[c, d]]
                ok = swept == cols[through.bit_length() - 1]
            if not ok:
                witness = idx.labels[li] + (c,)
                break
    return _report(name, cases, witness)


def _vy_a3_fast(t: IncidenceStructure) -> TheoremReport:
    idx = line_index(t, False)
    n, L = t.n_points, len(idx)
    if L == 0:
        return _report("VY_A3", 0, None)
    member = idx.point_matrix()
    kmax = int(member.sum(axis=1).max())
    pts = np.full((L, kmax), n, dtype=np.int64)     # padded with sentinel point n
    for li, mask in enumerate(idx.point_masks):
        b = bits(mask)
        pts[li, :len(b)] = b
    pl = np.full((n + 1, n + 1), L, dtype=np.int64)  # sentinel line L
    pl[:n, :n] = np.where(idx.pair_line >= 0, idx.pair_line, L)
    f = member.astype(np.float32)
    meets = np.ones((L + 1, L), dtype=bool)
    meets[:L] = (f @ f.T) > 0
    cases = 0
    witness = None
    for a in range(n):
        for b in range(a + 1, n):
            li = pl[a, b]
            cs = np.flatnonzero(~member[li])
            if not cs.size:
                continue
            d = pts[pl[b, cs]][:, :, None]
            e = pts[pl[cs, a]][:, None, :]
            valid = (d != e) & (d < n) & (e < n)
            ok = meets[pl[d, e], li]
            cases += int(valid.sum())
            if witness is None:
                bad = np.argwhere(valid & ~ok)
                if bad.size:
                    ci, di, ei = bad[0]
                    c = cs[ci]
                    witness = (a, b, int(c), int(d[ci, di, 0]), int(e[ci, 0, ei]))
    return _report("VY_A3", cases, witness)


def _vy_rest(t: IncidenceStructure) -> dict[str, TheoremReport]:
    idx = line_index(t, False)
    n, m, L = t.n_points, t.n_planes, len(idx)
    member = idx.point_matrix().astype(np.float32)
    both = member.T @ member
    i, j = np.triu_indices(n, 1)
    on = both[i, j]

    def first_pair(mask):
        hit = np.flatnonzero(mask)
        return (int(i[hit[0]]), int(j[hit[0]])) if hit.size else None

    sizes = [mask.bit_count() for mask in idx.point_masks]
    e0 = next((idx.labels[k] for k, z in enumerate(sizes) if z < 3), None)
    e2 = next((idx.labels[k] for k, mask in enumerate(idx.point_masks)
               if mask == t.all_points_mask), None)
    e3 = next(((a,) for a, col in enumerate(t.col_masks) if col == t.all_points_mask), None)
    e3p = None
    cols = t.col_masks
    for alpha in range(m):
        for beta in range(alpha + 1, m):
            if idx.id_of_points(cols[alpha] & cols[beta]) is None:
                e3p = (alpha, beta)
                break
        if e3p is not None:
            break
    return {
        "VY_A1": _report("VY_A1", i.size, first_pair(on < 1)),
        "VY_A2": _report("VY_A2", i.size, first_pair(on > 1)),
        "VY_E0": _report("VY_E0", L, e0, min_points=min(sizes, default=0)),
        "VY_E1": _report("VY_E1", 1, None if L else ()),
        "VY_E2": _report("VY_E2", L, e2),
        "VY_E3": _report("VY_E3", m, e3),
        "VY_E3p": _report("VY_E3p", comb(m, 2), e3p),
    }


_FAST = {"T1_pt": _t1_fast, "T1_pl": _t1_fast, "T2": _t2_fast,
         "T3_pt": _t3_fast, "T3_pl": _t3_fast, "LP_pt": _lp_fast, "LP_pl": _lp_fast,
         "VYC_pt": _vyc_fast, "VYC_pl": _vyc_fast}


# -- public checkers -----------------------------------------------------------------

def _require_axioms(s, force, limit, sample, seed):
    if force:
        return
    suite = check_all_axioms(s, limit=limit, sample=sample, seed=seed)
    if not suite.passed:
        failed = ", ".join(r.item for r in suite if not r.passed)
        raise AxiomsNotSatisfiedError(f"axioms fail ({failed}); theorems not checked",
                                      suite.reports)


def _run(names, s, force, limit, sample, seed) -> tuple[TheoremReport, ...]:
    guard_size(s, limit, sample)
    _require_axioms(s, force, limit, sample, seed)
    out = []
    for name in names:
        clause = THEOREM_CLAUSES[name]
        if sample is not None:
            out.append(sampled(clause, s, sample, seed, TheoremReport))
        else:
            out.append(_FAST[name](clause.target(s), name))
    return tuple(out)


def check_unique_plane(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    """Non-collinear points lie in one plane; non-collinear planes meet in one point.

    Returns ``(T1_pt, T1_pl)``. ``stats['collinear_perp_sizes']`` lists the
    perp sizes seen on collinear triples.
    """
    return _run(("T1_pt", "T1_pl"), s, force, limit, sample, seed)


def check_meet(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    return _run(("T2",), s, force, limit, sample, seed)[0]


def check_proper_pencil(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    """Returns ``(T3_pt, T3_pl, LP_pt, LP_pl)``.

    The ``LP`` items check that a line not lying in a plane meets it in exactly
    one point (and dually, a line not through a point shares one plane with it).
    """
    return _run(("T3_pt", "T3_pl", "LP_pt", "LP_pl"), s, force, limit, sample, seed)


def check_vy_characterization(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None,
                              seed=0):
    return _run(("VYC_pt", "VYC_pl"), s, force, limit, sample, seed)


def check_vy_axioms(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None,
                    seed=0) -> list[TheoremReport]:
    guard_size(s, limit, sample)
    _require_axioms(s, force, limit, sample, seed)
    if sample is not None:
        return [sampled(THEOREM_CLAUSES[n], s, sample, seed, TheoremReport)
                for n in VY_ITEMS]
    rest = _vy_rest(s)
    rest["VY_A3"] = _vy_a3_fast(s)
    reports = [rest[n] for n in VY_ITEMS]
    e2, e3 = rest["VY_E2"], rest["VY_E3"]
    if not force and not e2.passed and e3.passed:
        raise InconsistentStructureError(
            f"line {e2.witness} contains every point yet no plane does")
    return reports


def check_all_theorems(s, *, force=False, limit=DEFAULT_SIZE_LIMIT, sample=None,
                       seed=0) -> list[TheoremReport]:
    return list(_run(THEOREM_ITEMS, s, force, limit, sample, seed))


def replay_theorem(s: IncidenceStructure, report: Report) -> bool:
    """Re-evaluate a failing report's witness; True iff it reproduces the failure."""
    return THEOREM_CLAUSES[report.item].fails(s, report.witness)
