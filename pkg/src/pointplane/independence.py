"""Bounded search for structures that fail exactly one axiom group.

Small bounds (``max_points * max_planes <= 20``) are enumerated exhaustively,
shape by shape, modulo a cheap row/column-sorting quotient. Larger bounds fall
back to a seeded random search. A miss means only that nothing was found
within the bounds and budget.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

import numpy as np

from .axioms import AXIOM_GROUPS, check_all_axioms
from .incidence import IncidenceStructure

__all__ = ["SearchConfig", "SearchReport", "canonical_form", "search_independence",
           "EXHAUSTIVE_CELLS"]

EXHAUSTIVE_CELLS = 20

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchConfig:
    dropped_axiom: int
    max_points: int
    max_planes: int
    budget: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.dropped_axiom not in AXIOM_GROUPS:
            raise ValueError(f"dropped_axiom must be 1..4, got {self.dropped_axiom}")
        if self.max_points < 1 or self.max_planes < 1:
            raise ValueError("bounds must be at least 1")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")

    @property
    def exhaustive(self) -> bool:
        return self.max_points * self.max_planes <= EXHAUSTIVE_CELLS


@dataclass
class SearchReport:
    config: SearchConfig
    mode: str
    examined: int = 0
    unique: int = 0
    found: Optional[IncidenceStructure] = None
    failed_items: tuple[str, ...] = ()
    exhausted: bool = False
    notes: list[str] = field(default_factory=list)

    @property
    def duplicates(self) -> int:
        return self.examined - self.unique

    def to_text(self) -> str:
        c = self.config
        out = [
            f"search drop={c.dropped_axiom} max_points={c.max_points} "
            f"max_planes={c.max_planes} budget={c.budget} seed={c.seed}",
            f"mode {self.mode}",
            f"examined {self.examined}",
            f"unique {self.unique}",
            f"duplicates {self.duplicates}",
        ]
        if self.found is not None:
            out.append(f"found {self.found.n_points}x{self.found.n_planes} "
                       f"failing {','.join(self.failed_items)}")
        else:
            why = "search space exhausted" if self.exhausted else "budget exhausted"
            out.append(f"no witness within bounds/budget ({why})")
        out.extend(f"note {n}" for n in self.notes)
        return "\n".join(out) + "\n"


def canonical_form(rows: Matrix) -> Matrix:
    """Sort rows, then columns, until neither moves.

    A heuristic quotient by row/column permutations: isomorphic matrices may
    keep distinct forms, but equal forms are always isomorphic.
    """
    cur = tuple(sorted(rows))
    while True:
        cols = sorted(zip(*cur)) if cur and cur[0] else []
        nxt = tuple(sorted(zip(*cols))) if cols else cur
        if nxt == cur:
            return cur
        cur = nxt


def _shapes(cfg: SearchConfig) -> list[tuple[int, int]]:
    shapes = product(range(1, cfg.max_points + 1), range(1, cfg.max_planes + 1))
    return sorted(shapes, key=lambda nm: (nm[0] * nm[1], nm))


def _exhaustive(cfg: SearchConfig) -> Iterator[Matrix]:
    for n, m in _shapes(cfg):
        for code in range(1 << (n * m)):
            yield tuple(tuple((code >> (r * m + c)) & 1 for c in range(m))
                        for r in range(n))


def _randomized(cfg: SearchConfig) -> Iterator[Matrix]:
    rng = np.random.default_rng(cfg.seed)
    while True:
        n = int(rng.integers(1, cfg.max_points + 1))
        m = int(rng.integers(1, cfg.max_planes + 1))
        density = rng.random()
        cells = rng.random((n, m)) < density
        yield tuple(tuple(int(x) for x in row) for row in cells)


def _failed_groups(s: IncidenceStructure) -> tuple[set[int], tuple[str, ...]]:
    suite = check_all_axioms(s)
    return suite.failed_groups(), tuple(r.item for r in suite if not r.passed)


def search_independence(cfg: SearchConfig) -> SearchReport:
    """Look for a structure failing axiom group ``cfg.dropped_axiom`` only.

    Each new candidate is classified by :func:`check_all_axioms`; the first
    one whose failing groups are exactly ``{dropped_axiom}`` is returned in
    ``report.found``.
    """
    mode = "exhaustive" if cfg.exhaustive else "randomized"
    report = SearchReport(cfg, mode)
    if not cfg.exhaustive:
        report.notes.append(
            f"bounds exceed {EXHAUSTIVE_CELLS} cells; seeded random sampling used")
    seen: set[Matrix] = set()
    source = _exhaustive(cfg) if cfg.exhaustive else _randomized(cfg)
    for rows in source:
        if report.examined >= cfg.budget:
            break
        report.examined += 1
        key = canonical_form(rows)
        if key in seen:
            continue
        seen.add(key)
        s = IncidenceStructure(np.array(key, dtype=bool))
        groups, items = _failed_groups(s)
        if groups == {cfg.dropped_axiom}:
            report.found = s
            report.failed_items = items
            break
    else:
        report.exhausted = True
    report.unique = len(seen)
    return report
