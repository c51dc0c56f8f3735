"""Verdict records and the quantifier clauses behind them.

Each checked item is a :class:`Clause`: a quantifier over tuples drawn from the
point and plane sorts, a domain filter, and the predicate that must hold. The
clause predicates use only the incidence primitives, so they serve as witness
replay, as the sampled checking mode, and as a slow reference path for the
vectorized checkers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Optional

import numpy as np

from .errors import ResourceLimitError
from .incidence import IncidenceStructure

DEFAULT_SIZE_LIMIT = 512

POINT, PLANE = "pt", "pl"


@dataclass(frozen=True)
class Report:
    item: str
    passed: bool
    witness: Optional[tuple[int, ...]] = None
    checked_cases: int = 0
    sampled: bool = False
    stats: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failing report {self.item} needs a witness")

    def line(self) -> str:
        """``<ITEM> PASS|FAIL [witness=...] cases=<n>``"""
        parts = [self.item, "PASS" if self.passed else "FAIL"]
        if not self.passed:
            parts.append("witness=" + ",".join(str(i) for i in self.witness))
        parts.append(f"cases={self.checked_cases}")
        if self.sampled:
            parts.append("sampled")
        return " ".join(parts)


@dataclass(frozen=True)
class AxiomReport(Report):
    @property
    def axiom(self) -> str:
        return self.item


@dataclass(frozen=True)
class TheoremReport(Report):
    @property
    def theorem(self) -> str:
        return self.item


Pred = Callable[[IncidenceStructure, tuple], bool]


@dataclass(frozen=True)
class Clause:
    name: str
    sorts: tuple[str, ...]
    in_domain: Pred
    holds: Pred
    on_dual: bool = False

    def target(self, s: IncidenceStructure) -> IncidenceStructure:
        return s.dual if self.on_dual else s

    def sizes(self, s: IncidenceStructure) -> tuple[int, ...]:
        return tuple(s.n_points if srt == POINT else s.n_planes for srt in self.sorts)

    def fails(self, s: IncidenceStructure, w: tuple) -> bool:
        """True iff ``w`` is in the quantifier domain and violates the clause."""
        t = self.target(s)
        if len(w) != len(self.sorts):
            return False
        limits = self.sizes(s)
        if any(not 0 <= x < n for x, n in zip(w, limits)):
            return False
        return self.in_domain(t, w) and not self.holds(t, w)

    def dual(self, name: str) -> "Clause":
        swap = {POINT: PLANE, PLANE: POINT}
        return Clause(name, tuple(swap[x] for x in self.sorts),
                      self.in_domain, self.holds, not self.on_dual)


def brute_force(clause: Clause, s: IncidenceStructure, kind=Report) -> Report:
    """Evaluate a clause over its whole domain in lexicographic order.

    ``checked_cases`` is the full domain size even when a failure is found.
    """
    t = clause.target(s)
    cases = 0
    witness = None
    for w in product(*(range(n) for n in clause.sizes(s))):
        if clause.in_domain(t, w):
            cases += 1
            if witness is None and not clause.holds(t, w):
                witness = w
    return kind(clause.name, witness is None, witness, cases)


def sampled(clause: Clause, s: IncidenceStructure, n: int, seed: int = 0,
            kind=Report) -> Report:
    """Evaluate ``n`` uniformly drawn tuples; report the least failing one."""
    rng = np.random.default_rng(seed)
    t = clause.target(s)
    sizes = clause.sizes(s)
    cases = 0
    bad = []
    if any(k == 0 for k in sizes):
        return kind(clause.name, True, None, 0, sampled=True)
    for _ in range(n):
        w = tuple(int(rng.integers(k)) for k in sizes)
        if clause.in_domain(t, w):
            cases += 1
            if not clause.holds(t, w):
                bad.append(w)
    if bad:
        return kind(clause.name, False, min(bad), cases, sampled=True)
    return kind(clause.name, True, None, cases, sampled=True)


def guard_size(s: IncidenceStructure, limit: int, sample: Optional[int]):
    if sample is None and max(s.n_points, s.n_planes) > limit:
        raise ResourceLimitError(
            f"structure {s.n_points}x{s.n_planes} exceeds the exhaustive bound "
            f"{limit}; pass sample=N to check a random subset")
