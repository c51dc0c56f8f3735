"""The classical models PG(3, q) over prime fields."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DegenerateInputError, ResourceLimitError
from .incidence import IncidenceStructure

__all__ = ["PrimeField", "ProjVector", "normalize", "projective_points",
           "generate_pg3", "DEFAULT_MAX_Q"]

DEFAULT_MAX_Q = 7


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not _is_prime(self.q):
            raise ValueError(f"field order must be prime, got {self.q!r}")

    def inv(self, a: int) -> int:
        return pow(a % self.q, -1, self.q)


@dataclass(frozen=True)
class ProjVector:
    """Normalized homogeneous 4-tuple: first nonzero coordinate is 1."""
    coords: tuple[int, int, int, int]
    q: int

    def dot(self, other: "ProjVector") -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords)) % self.q


def _field(q) -> PrimeField:
    return q if isinstance(q, PrimeField) else PrimeField(q)


def normalize(v, q) -> ProjVector:
    """Scale ``v`` so its first nonzero coordinate is 1.

    >>> normalize((2, 1, 0, 2), 3).coords
    (1, 2, 0, 1)
    """
    field = _field(q)
    coords = tuple(int(c) % field.q for c in v)
    if len(coords) != 4:
        raise ValueError(f"expected a 4-tuple, got {len(coords)} coordinates")
    lead = next((c for c in coords if c), 0)
    if lead == 0:
        raise DegenerateInputError("the zero vector has no projective class")
    k = field.inv(lead)
    return ProjVector(tuple(c * k % field.q for c in coords), field.q)


def projective_points(q) -> list[ProjVector]:
    """All normalized nonzero 4-vectors over GF(q), lexicographic order.

    For q = 2 this is exactly the binary expansion of 1..15 (coordinate 0 most
    significant), so list position ``i`` holds the vector encoding ``i + 1``.
    """
    field = _field(q)
    out = []
    for coords in product(range(field.q), repeat=4):
        lead = next((c for c in coords if c), 0)
        if lead == 1:
            out.append(ProjVector(coords, field.q))
    return out


def generate_pg3(q, max_q: int = DEFAULT_MAX_Q) -> IncidenceStructure:
    """Point/plane incidence of PG(3, q).

    Points and planes are both indexed by :func:`projective_points`; a point
    lies in a plane iff their coordinate dot product vanishes mod q.
    """
    field = _field(q)
    if field.q > max_q:
        raise ResourceLimitError(f"q={field.q} exceeds the configured bound {max_q}")
    vecs = np.array([v.coords for v in projective_points(field)], dtype=np.int64)
    return IncidenceStructure((vecs @ vecs.T) % field.q == 0)
