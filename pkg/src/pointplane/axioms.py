"""Exhaustive checks of the four self-dual point/plane axioms.

Every clause is checked over its full quantifier domain (up to a size bound)
and a failing report carries the lexicographically least counterexample.
Plane clauses are the point clauses run on the dual structure, so a plane
witness lists plane indices first.

Quantifier domains (``checked_cases`` is the domain size):

* ``A1_pt``  every point P: some plane misses P.
* ``A2_pt``  every A <= B: more than two planes pass through A and B.
* ``A3_pt``  every A <= B <= C: some plane passes through all three.
* ``A4``     every A < B, alpha < beta with {A,B} incident to {alpha,beta}:
  ``{A,B}^perp == {alpha,beta}^perp^perp`` and ``{alpha,beta}^perp == {A,B}^perp^perp``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .clauses import (DEFAULT_SIZE_LIMIT, PLANE, POINT, AxiomReport, Clause,
                      Report, guard_size, sampled)
from .incidence import IncidenceStructure, bits

__all__ = [
    "AxiomReport",
    "AxiomSuite",
    "AXIOM_CLAUSES",
    "AXIOM_GROUPS",
    "DUAL_NAME",
    "check_axiom1",
    "check_axiom2",
    "check_axiom3",
    "check_axiom4",
    "check_all_axioms",
    "check_duality",
    "replay_axiom",
]


# -- clause predicates (primitives only) ---------------------------------------

def _a1_holds(s, w):
    (p,) = w
    return s.planes_through(p) != frozenset(range(s.n_planes))


def _a2_domain(s, w):
    return w[0] <= w[1]


def _a2_holds(s, w):
    return len(s.perp_points(w)) > 2


def _a3_domain(s, w):
    return w[0] <= w[1] <= w[2]


def _a3_holds(s, w):
    return len(s.perp_points(w)) > 0


def _a4_domain(s, w):
    a, b, alpha, beta = w
    return a < b and alpha < beta and s.mutually_incident((a, b), (alpha, beta))


def _a4_holds(s, w):
    a, b, alpha, beta = w
    pts, pls = (a, b), (alpha, beta)
    return (s.perp_points(pts) == s.perp_points(s.perp_planes(pls))
            and s.perp_planes(pls) == s.perp_planes(s.perp_points(pts)))


_A1 = Clause("A1_pt", (POINT,), lambda s, w: True, _a1_holds)
_A2 = Clause("A2_pt", (POINT, POINT), _a2_domain, _a2_holds)
_A3 = Clause("A3_pt", (POINT, POINT, POINT), _a3_domain, _a3_holds)
_A4 = Clause("A4", (POINT, POINT, PLANE, PLANE), _a4_domain, _a4_holds)

AXIOM_CLAUSES: dict[str, Clause] = {
    "A1_pt": _A1, "A1_pl": _A1.dual("A1_pl"),
    "A2_pt": _A2, "A2_pl": _A2.dual("A2_pl"),
    "A3_pt": _A3, "A3_pl": _A3.dual("A3_pl"),
    "A4": _A4,
}
AXIOM_GROUPS = {1: ("A1_pt", "A1_pl"), 2: ("A2_pt", "A2_pl"),
                3: ("A3_pt", "A3_pl"), 4: ("A4",)}
DUAL_NAME = {"A1_pt": "A1_pl", "A1_pl": "A1_pt", "A2_pt": "A2_pl", "A2_pl": "A2_pt",
             "A3_pt": "A3_pl", "A3_pl": "A3_pt", "A4": "A4"}


# -- vectorized exhaustive paths ---------------------------------------------

def _a1_fast(t: IncidenceStructure, name: str) -> AxiomReport:
    full = t.all_planes_mask
    for p, row in enumerate(t.row_masks):
        if row == full:
            return AxiomReport(name, False, (p,), t.n_points)
    return AxiomReport(name, True, None, t.n_points)


def _a2_fast(t: IncidenceStructure, name: str) -> AxiomReport:
    n = t.n_points
    m = t.matrix.astype(np.float32)
    counts = m @ m.T
    iu = np.triu_indices(n)
    vals = counts[iu]
    stats = {}
    if n > 1:
        stats["min_distinct"] = int(counts[np.triu_indices(n, 1)].min())
    bad = np.flatnonzero(vals <= 2)
    if bad.size:
        k = bad[0]
        return AxiomReport(name, False, (int(iu[0][k]), int(iu[1][k])), vals.size, stats=stats)
    return AxiomReport(name, True, None, vals.size, stats=stats)


def _a3_fast(t: IncidenceStructure, name: str) -> AxiomReport:
    n = t.n_points
    cases = comb(n + 2, 3)
    m = t.matrix.astype(np.float32)
    for a in range(n):
        tail = m[a:]
        common = (tail * m[a]) @ tail.T
        iu = np.triu_indices(n - a)
        bad = np.flatnonzero(common[iu] == 0)
        if bad.size:
            k = bad[0]
            return AxiomReport(name, False, (a, a + int(iu[0][k]), a + int(iu[1][k])), cases)
    return AxiomReport(name, True, None, cases)


def _a4_pencil(t: IncidenceStructure, pls: int):
    """(plane-pair count, first failing plane pair) for a point pair with perp ``pls``."""
    closure = t.closure_of_plane_mask(pls)
    cols = t.col_masks
    planes = bits(pls)
    first_bad = None
    for i, alpha in enumerate(planes):
        for beta in planes[i + 1:]:
            shared = cols[alpha] & cols[beta]
            ok = t.perp_points_mask(shared) == pls and shared == closure
            if not ok and first_bad is None:
                first_bad = (alpha, beta)
    return comb(len(planes), 2), first_bad


def _a4_fast(t: IncidenceStructure, name: str) -> AxiomReport:
    rows = t.row_masks
    memo: dict[int, tuple] = {}
    cases = 0
    witness = None
    for a in range(t.n_points):
        for b in range(a + 1, t.n_points):
            pls = rows[a] & rows[b]
            r = memo.get(pls)
            if r is None:
                r = memo[pls] = _a4_pencil(t, pls)
            cases += r[0]
            if witness is None and r[1] is not None:
                witness = (a, b) + r[1]
    return AxiomReport(name, witness is None, witness, cases)


_FAST = {"A1_pt": _a1_fast, "A2_pt": _a2_fast, "A3_pt": _a3_fast, "A4": _a4_fast}
_FAST.update({"A1_pl": _a1_fast, "A2_pl": _a2_fast, "A3_pl": _a3_fast})


def _run(name: str, s: IncidenceStructure, limit: int, sample: Optional[int],
         seed: int) -> AxiomReport:
    guard_size(s, limit, sample)
    clause = AXIOM_CLAUSES[name]
    if sample is not None:
        return sampled(clause, s, sample, seed, AxiomReport)
    return _FAST[name](clause.target(s), name)


def check_axiom1(s, *, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    """No point lies in every plane; no plane contains every point."""
    return (_run("A1_pt", s, limit, sample, seed), _run("A1_pl", s, limit, sample, seed))


def check_axiom2(s, *, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    """Any two points share more than two planes, and dually.

    Pairs with ``A == B`` are included, matching the unrestricted quantifier.
    ``stats['min_distinct']`` is the least pencil size over distinct pairs.
    """
    return (_run("A2_pt", s, limit, sample, seed), _run("A2_pl", s, limit, sample, seed))


def check_axiom3(s, *, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    return (_run("A3_pt", s, limit, sample, seed), _run("A3_pl", s, limit, sample, seed))


def check_axiom4(s, *, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0):
    return _run("A4", s, limit, sample, seed)


@dataclass(frozen=True)
class AxiomSuite:
    """The seven clause reports plus structural notes."""
    reports: tuple[AxiomReport, ...]
    notes: tuple[str, ...] = ()

    def __iter__(self):
        return iter(self.reports)

    def __len__(self):
        return len(self.reports)

    def __getitem__(self, key):
        if isinstance(key, str):
            for r in self.reports:
                if r.item == key:
                    return r
            raise KeyError(key)
        return self.reports[key]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def failed_groups(self) -> set[int]:
        return {g for g, names in AXIOM_GROUPS.items()
                if not all(self[n].passed for n in names)}


def check_all_axioms(s, *, limit=DEFAULT_SIZE_LIMIT, sample=None, seed=0) -> AxiomSuite:
    kw = dict(limit=limit, sample=sample, seed=seed)
    reports = (*check_axiom1(s, **kw), *check_axiom2(s, **kw),
               *check_axiom3(s, **kw), check_axiom4(s, **kw))
    notes = []
    if s.n_points == 0 and s.n_planes == 0:
        notes.append("degenerate: both sorts empty")
    elif all(r.passed for r in reports[2:6]) and s.n_points and s.n_planes:
        notes.append(f"each sort has at least three elements "
                     f"({s.n_points} points, {s.n_planes} planes)")
    return AxiomSuite(reports, tuple(notes))


def replay_axiom(s: IncidenceStructure, report: Report) -> bool:
    """Re-evaluate a failing report's witness; True iff it reproduces the failure."""
    return AXIOM_CLAUSES[report.item].fails(s, report.witness)


def _transpose_a4(w):
    return (w[2], w[3], w[0], w[1])


def check_duality(s, *, limit=DEFAULT_SIZE_LIMIT) -> bool:
    """Axiom reports on the dual are the reports on ``s`` with clauses swapped.

    Witnesses must match exactly for the one-sort clauses. The least A4 witness
    depends on which sort is enumerated first, so there the dual's witness is
    transposed and replayed against ``s`` instead.
    """
    mine = {r.item: r for r in check_all_axioms(s, limit=limit)}
    theirs = {r.item: r for r in check_all_axioms(s.dual, limit=limit)}
    for name, r in mine.items():
        d = theirs[DUAL_NAME[name]]
        if (r.passed, r.checked_cases) != (d.passed, d.checked_cases):
            return False
        if r.passed:
            continue
        if name == "A4":
            if not _A4.fails(s, _transpose_a4(d.witness)):
                return False
        elif r.witness != d.witness:
            return False
    return True
