"""Lines as pairs of matching pencils, collinearity, and line incidence.

A line is the union of a pencil of points ``{A,B}^perp^perp`` and the pencil of
planes ``{A,B}^perp``. Lines compare and hash by their point pencil.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import DegenerateInputError, InconsistentStructureError, MalformedLineError
from .incidence import IncidenceStructure, bits

__all__ = [
    "Line",
    "MeetKind",
    "MeetResult",
    "collinear_points",
    "collinear_planes",
    "line_through_points",
    "line_through_planes",
    "all_lines",
    "lines_meet",
    "LineIndex",
    "line_index",
]


@dataclass(frozen=True, eq=False)
class Line:
    point_pencil: frozenset[int]
    plane_pencil: frozenset[int]

    def __eq__(self, other):
        if not isinstance(other, Line):
            return NotImplemented
        return self.point_pencil == other.point_pencil

    def __hash__(self):
        return hash(self.point_pencil)

    def points(self) -> tuple[int, ...]:
        return tuple(sorted(self.point_pencil))

    def planes(self) -> tuple[int, ...]:
        return tuple(sorted(self.plane_pencil))

    def transpose(self) -> "Line":
        """The same line seen in the dual structure."""
        return Line(self.plane_pencil, self.point_pencil)

    def __repr__(self):
        return f"Line(points={list(self.points())}, planes={list(self.planes())})"


class MeetKind(str, enum.Enum):
    EQUAL = "equal"
    DISJOINT = "disjoint"
    MEET = "meet"


@dataclass(frozen=True)
class MeetResult:
    kind: MeetKind
    shared_point: Optional[int] = None
    shared_plane: Optional[int] = None


def _pair_closure(s: IncidenceStructure, a: int, b: int) -> tuple[int, int]:
    planes = s.row_masks[a] & s.row_masks[b]
    return s.closure_of_plane_mask(planes), planes


def collinear_points(s: IncidenceStructure, a: int, b: int, c: int) -> bool:
    """True iff ``c`` lies in the pencil ``{a, b}^perp^perp``."""
    a, b, c = s._check_point(a), s._check_point(b), s._check_point(c)
    if a == b:
        raise DegenerateInputError("collinearity needs two distinct base points")
    common = s.row_masks[a] & s.row_masks[b]
    return common & ~s.row_masks[c] == 0


def collinear_planes(s: IncidenceStructure, alpha: int, beta: int, gamma: int) -> bool:
    return collinear_points(s.dual, alpha, beta, gamma)


def _validate_masks(s: IncidenceStructure, pts: int, pls: int):
    """Name of the first Line invariant the mask pair breaks, or None."""
    if s.perp_planes_mask(pls) != pts:
        return "point_pencil = perp_planes(plane_pencil)"
    if s.perp_points_mask(pts) != pls:
        return "plane_pencil = perp_points(point_pencil)"
    if pts.bit_count() < 3:
        return "|point_pencil| >= 3"
    if pls.bit_count() < 3:
        return "|plane_pencil| >= 3"
    return None


def line_through_points(s: IncidenceStructure, a: int, b: int,
                        strict: bool = True) -> Line:
    """The line AB. With ``strict`` the Line invariants are enforced."""
    a, b = s._check_point(a), s._check_point(b)
    if a == b:
        raise DegenerateInputError("a line needs two distinct points")
    pts, pls = _pair_closure(s, a, b)
    if strict:
        bad = _validate_masks(s, pts, pls)
        if bad is not None:
            raise MalformedLineError(
                f"points ({a}, {b}) do not span a line: violates {bad}",
                pair=(a, b), invariant=bad)
    return Line(frozenset(bits(pts)), frozenset(bits(pls)))


def line_through_planes(s: IncidenceStructure, alpha: int, beta: int,
                        strict: bool = True) -> Line:
    return line_through_points(s.dual, alpha, beta, strict=strict).transpose()


class LineIndex:
    """Every line of a structure with lookup tables for bulk checks.

    Lines are ordered by their label, the lexicographically least point pair
    spanning them. ``pair_line[A, B]`` is the id of line AB (-1 on the diagonal).
    """

    def __init__(self, s: IncidenceStructure, strict: bool = True):
        n = s.n_points
        rows = s.row_masks
        first: dict[int, tuple[int, int, int]] = {}
        pair_key = np.full((n, n), -1, dtype=np.int64)
        keys: list[int] = []
        checked: set[int] = set()
        for a in range(n):
            ra = rows[a]
            for b in range(a + 1, n):
                pls = ra & rows[b]
                pts = s.closure_of_plane_mask(pls)
                if strict and pls not in checked:
                    bad = _validate_masks(s, pts, pls)
                    if bad is not None:
                        raise MalformedLineError(
                            f"points ({a}, {b}) do not span a line: violates {bad}",
                            pair=(a, b), invariant=bad)
                    checked.add(pls)
                hit = first.get(pts)
                if hit is not None:
                    k = hit[0]
                else:
                    k = len(keys)
                    first[pts] = (k, a, b)
                    keys.append(pts)
                pair_key[a, b] = pair_key[b, a] = k
        # first-seen order over lexicographic pairs is already label order
        self.structure = s
        self.point_masks: list[int] = keys
        self.plane_masks: list[int] = [s.perp_points_mask(m) for m in keys]
        self.labels: list[tuple[int, int]] = [None] * len(keys)
        for pts, (k, a, b) in first.items():
            self.labels[k] = (a, b)
        self.pair_line = pair_key
        self._id_of = {m: i for i, m in enumerate(keys)}

    def __len__(self):
        return len(self.point_masks)

    def id_of_points(self, mask: int) -> Optional[int]:
        return self._id_of.get(mask)

    def lines(self) -> list[Line]:
        return [Line(frozenset(bits(p)), frozenset(bits(q)))
                for p, q in zip(self.point_masks, self.plane_masks)]

    def point_matrix(self) -> np.ndarray:
        """Boolean (n_lines, n_points) membership matrix."""
        m = np.zeros((len(self), self.structure.n_points), dtype=bool)
        for i, mask in enumerate(self.point_masks):
            m[i, bits(mask)] = True
        return m

    def plane_matrix(self) -> np.ndarray:
        m = np.zeros((len(self), self.structure.n_planes), dtype=bool)
        for i, mask in enumerate(self.plane_masks):
            m[i, bits(mask)] = True
        return m


@lru_cache(maxsize=16)
def line_index(s: IncidenceStructure, strict: bool = True) -> LineIndex:
    return LineIndex(s, strict=strict)


def all_lines(s: IncidenceStructure, strict: bool = True) -> list[Line]:
    """Every distinct line AB, ordered by least spanning pair."""
    return line_index(s, strict).lines()


def _check_line(s: IncidenceStructure, line: Line) -> tuple[int, int]:
    pts = s.point_mask(line.point_pencil)
    pls = s.plane_mask(line.plane_pencil)
    bad = _validate_masks(s, pts, pls)
    if bad is not None:
        raise MalformedLineError(f"{line!r} violates {bad}", invariant=bad)
    return pts, pls


def lines_meet(s: IncidenceStructure, l1: Line, l2: Line) -> MeetResult:
    """Classify two lines as equal, meeting, or skew.

    Raises :class:`InconsistentStructureError` when the point and plane
    intersections disagree, or when distinct meeting lines share more than
    one point or plane.
    """
    p1, q1 = _check_line(s, l1)
    p2, q2 = _check_line(s, l2)
    if p1 == p2:
        return MeetResult(MeetKind.EQUAL)
    pts, pls = p1 & p2, q1 & q2
    if bool(pts) != bool(pls):
        raise InconsistentStructureError(
            f"{l1!r} and {l2!r} share points {bits(pts)} but planes {bits(pls)}")
    if not pts:
        return MeetResult(MeetKind.DISJOINT)
    if pts.bit_count() != 1 or pls.bit_count() != 1:
        raise InconsistentStructureError(
            f"distinct lines share points {bits(pts)} and planes {bits(pls)}")
    return MeetResult(MeetKind.MEET, bits(pts)[0], bits(pls)[0])

