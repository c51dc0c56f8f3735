"""Exception hierarchy shared by every module."""


class PointPlaneError(Exception):
    """Base class for errors raised by :mod:`pointplane`."""


class DegenerateInputError(PointPlaneError, ValueError):
    """An operation was handed inputs it is not defined on (e.g. A == B)."""


class MalformedLineError(PointPlaneError):
    """A pencil pair fails the line invariants in a non-conforming structure."""

    def __init__(self, message, pair=None, invariant=None):
        super().__init__(message)
        self.pair = pair
        self.invariant = invariant


class InconsistentStructureError(PointPlaneError):
    """The structure contradicts a theorem that holds under the axioms."""


class AxiomsNotSatisfiedError(PointPlaneError):
    """A theorem checker was called on a structure failing the axioms."""

    def __init__(self, message, reports=()):
        super().__init__(message)
        self.reports = tuple(reports)


class ResourceLimitError(PointPlaneError):
    """Input exceeds the configured size bound for exhaustive work."""


class StructureFormatError(PointPlaneError, ValueError):
    """Malformed structure document. ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column


class FormatError(StructureFormatError):
    """Bad magic, version, or header line."""


class ShapeError(StructureFormatError):
    """Row count or row length disagrees with the declared shape."""


class ContentError(StructureFormatError):
    """A row contains a character other than '0' or '1'."""
