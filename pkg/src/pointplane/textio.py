"""Plain-text structure documents.

::

    INCIDENCE v1
    points <n>
    planes <m>
    <n rows of m characters from {0,1}; row i, column j is 1 iff point i lies in plane j>

Every line ends with a single LF. Parsing accepts only the canonical form, so
``serialize_structure(parse_structure(d)) == d`` for every accepted ``d``.
"""
from __future__ import annotations

import re

import numpy as np

from .errors import ContentError, FormatError, ShapeError
from .incidence import IncidenceStructure

__all__ = ["parse_structure", "serialize_structure", "MAGIC"]

MAGIC = "INCIDENCE v1"
_COUNT = re.compile(r"(0|[1-9][0-9]*)")


def serialize_structure(s: IncidenceStructure) -> str:
    rows = ["".join("1" if x else "0" for x in row) for row in s.matrix]
    return "".join(line + "\n" for line in
                   [MAGIC, f"points {s.n_points}", f"planes {s.n_planes}", *rows])


def _count(line: str, key: str, lineno: int) -> int:
    prefix = key + " "
    if not line.startswith(prefix):
        raise FormatError(f"expected '{prefix}<count>', got {line!r}", lineno, 1)
    digits = line[len(prefix):]
    if not _COUNT.fullmatch(digits):
        raise FormatError(f"bad {key} count {digits!r}", lineno, len(prefix) + 1)
    return int(digits)


def parse_structure(text: str) -> IncidenceStructure:
    if not text.endswith("\n"):
        lineno = text.count("\n") + 1
        raise FormatError("document must end with a line feed", lineno)
    lines = text[:-1].split("\n")
    if lines[0] != MAGIC:
        raise FormatError(f"expected {MAGIC!r}, got {lines[0]!r}", 1, 1)
    if len(lines) < 3:
        raise FormatError("missing points/planes header", len(lines) + 1)
    n = _count(lines[1], "points", 2)
    m = _count(lines[2], "planes", 3)
    rows = lines[3:]
    if len(rows) < n:
        raise ShapeError(f"expected {n} rows, found {len(rows)}", 4 + len(rows))
    if len(rows) > n:
        raise ShapeError(f"expected {n} rows, found extra data", 4 + n)
    matrix = np.zeros((n, m), dtype=bool)
    for i, row in enumerate(rows):
        lineno = 4 + i
        for j, ch in enumerate(row[:m]):
            if ch not in "01":
                raise ContentError(f"invalid character {ch!r}", lineno, j + 1)
        if len(row) != m:
            raise ShapeError(f"row has {len(row)} characters, expected {m}",
                             lineno, min(len(row), m) + 1)
        matrix[i] = np.frombuffer(row.encode("ascii"), dtype=np.uint8) == ord("1")
    return IncidenceStructure(matrix)
