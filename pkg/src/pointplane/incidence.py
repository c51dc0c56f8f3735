"""Finite point/plane incidence structures and the two perp operators.

Points and planes are dense indices ``0..n-1`` per sort. Sets of either sort
are exchanged as ``frozenset`` at the public surface and as Python ``int``
bitmasks internally (bit ``i`` set iff element ``i`` is a member).
"""
from __future__ import annotations

from collections.abc import Iterable
from typing import Optional

import numpy as np

__all__ = [
    "IncidenceStructure",
    "incident",
    "perp_points",
    "perp_planes",
    "mutually_incident",
    "dualize",
    "bits",
    "mask_of",
]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def _row_masks(matrix: np.ndarray) -> tuple[int, ...]:
    if matrix.shape[1] == 0:
        return (0,) * matrix.shape[0]
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)


class IncidenceStructure:
    """Immutable incidence relation between ``n_points`` points and ``n_planes`` planes.

    ``matrix[P, pi]`` is True iff point ``P`` lies in plane ``pi``. The relation
    is held twice, as row masks (planes through each point) and column masks
    (points in each plane), so both query directions are O(1).
    """

    __slots__ = ("_matrix", "_rows", "_cols", "_full_points", "_full_planes",
                 "_hash", "_dual", "_closure_cache", "__weakref__")

    def __init__(self, matrix):
        m = np.array(matrix, dtype=bool)
        if m.size == 0 and m.ndim != 2:
            m = m.reshape(0, 0)
        if m.ndim != 2:
            raise ValueError(f"incidence matrix must be 2-d, got shape {m.shape}")
        m.setflags(write=False)
        self._matrix = m
        self._rows = _row_masks(m)
        self._cols = _row_masks(m.T)
        self._full_points = (1 << m.shape[0]) - 1
        self._full_planes = (1 << m.shape[1]) - 1
        self._hash = None
        self._dual: Optional[IncidenceStructure] = None
        self._closure_cache: dict[int, int] = {}

    @classmethod
    def from_pairs(cls, n_points: int, n_planes: int,
                   pairs: Iterable[tuple[int, int]]) -> "IncidenceStructure":
        m = np.zeros((n_points, n_planes), dtype=bool)
        for p, pi in pairs:
            m[p, pi] = True
        return cls(m)

    @classmethod
    def empty(cls) -> "IncidenceStructure":
        return cls(np.zeros((0, 0), dtype=bool))

    # -- shape and raw access -------------------------------------------
    @property
    def n_points(self) -> int:
        return self._matrix.shape[0]

    @property
    def n_planes(self) -> int:
        return self._matrix.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._matrix.shape

    @property
    def matrix(self) -> np.ndarray:
        """Read-only boolean view, rows are points and columns are planes."""
        return self._matrix

    @property
    def row_masks(self) -> tuple[int, ...]:
        return self._rows

    @property
    def col_masks(self) -> tuple[int, ...]:
        return self._cols

    @property
    def all_points_mask(self) -> int:
        return self._full_points

    @property
    def all_planes_mask(self) -> int:
        return self._full_planes

    def _check_point(self, p) -> int:
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise TypeError(f"point index must be an integer, got {p!r}")
        if not 0 <= p < self.n_points:
            raise IndexError(f"point index {p} out of range [0, {self.n_points})")
        return int(p)

    def _check_plane(self, pi) -> int:
        if not isinstance(pi, (int, np.integer)) or isinstance(pi, bool):
            raise TypeError(f"plane index must be an integer, got {pi!r}")
        if not 0 <= pi < self.n_planes:
            raise IndexError(f"plane index {pi} out of range [0, {self.n_planes})")
        return int(pi)

    def point_mask(self, points: Iterable[int]) -> int:
        return mask_of(self._check_point(p) for p in points)

    def plane_mask(self, planes: Iterable[int]) -> int:
        return mask_of(self._check_plane(pi) for pi in planes)

    # -- incidence -------------------------------------------------------
    def incident(self, p: int, pi: int) -> bool:
        p, pi = self._check_point(p), self._check_plane(pi)
        return bool(self._rows[p] >> pi & 1)

    def planes_through(self, p: int) -> frozenset[int]:
        return frozenset(bits(self._rows[self._check_point(p)]))

    def points_on(self, pi: int) -> frozenset[int]:
        return frozenset(bits(self._cols[self._check_plane(pi)]))

    # -- perp operators on masks ----------------------------------------
    def perp_points_mask(self, points: int) -> int:
        """Planes incident with every point in the mask; all planes for 0."""
        out = self._full_planes
        rows = self._rows
        while points and out:
            low = points & -points
            out &= rows[low.bit_length() - 1]
            points ^= low
        return out

    def perp_planes_mask(self, planes: int) -> int:
        """Points incident with every plane in the mask; all points for 0."""
        out = self._full_points
        cols = self._cols
        while planes and out:
            low = planes & -planes
            out &= cols[low.bit_length() - 1]
            planes ^= low
        return out

    def closure_of_plane_mask(self, planes: int) -> int:
        """Memoized ``perp_planes_mask``; used for pencils of points."""
        cache = self._closure_cache
        hit = cache.get(planes)
        if hit is None:
            hit = cache[planes] = self.perp_planes_mask(planes)
        return hit

    def point_closure_mask(self, points: int) -> int:
        """Double perp of a point set: ``S^perp^perp`` as a point mask."""
        return self.closure_of_plane_mask(self.perp_points_mask(points))

    # -- perp operators on sets -----------------------------------------
    def perp_points(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(bits(self.perp_points_mask(self.point_mask(points))))

    def perp_planes(self, planes: Iterable[int]) -> frozenset[int]:
        return frozenset(bits(self.perp_planes_mask(self.plane_mask(planes))))

    def mutually_incident(self, points: Iterable[int], planes: Iterable[int]) -> bool:
        pm = self.point_mask(points)
        sm = self.plane_mask(planes)
        return self.perp_points_mask(pm) & sm == sm

    # -- duality ----------------------------------------------------------
    @property
    def dual(self) -> "IncidenceStructure":
        """The transposed structure (points and planes interchanged)."""
        if self._dual is None:
            d = IncidenceStructure(self._matrix.T)
            d._dual = self
            self._dual = d
        return self._dual

    # -- value semantics ------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self._rows))
        return self._hash

    def __repr__(self):
        return f"IncidenceStructure(n_points={self.n_points}, n_planes={self.n_planes})"


def incident(s: IncidenceStructure, p: int, pi: int) -> bool:
    return s.incident(p, pi)


def perp_points(s: IncidenceStructure, points: Iterable[int]) -> frozenset[int]:
    """Planes incident with every given point (all planes for the empty set)."""
    return s.perp_points(points)


def perp_planes(s: IncidenceStructure, planes: Iterable[int]) -> frozenset[int]:
    """Points incident with every given plane (all points for the empty set)."""
    return s.perp_planes(planes)


def mutually_incident(s: IncidenceStructure, points: Iterable[int],
                      planes: Iterable[int]) -> bool:
    return s.mutually_incident(points, planes)


def dualize(s: IncidenceStructure) -> IncidenceStructure:
    return s.dual
