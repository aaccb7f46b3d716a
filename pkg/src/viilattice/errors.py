"""Shared exception types for the lattice toolkit."""

from __future__ import annotations


class DimensionMismatch(ValueError):
    """Operands live in lattices of different rank."""


class DomainError(ValueError):
    """Argument outside the mathematically meaningful range of an operation."""


class InvalidConfigError(ValueError):
    """A curve configuration violates a structural invariant."""

    def __init__(self, message: str, issues=()):
        super().__init__(message)
        self.issues = tuple(issues)


class StructureError(ValueError):
    """Dual graph shape that cannot occur on these surfaces.

    Raised for overlapping or touching cycles, trees attached to more than
    one cycle member, and similar impossibilities.
    """


class EnumerationCapError(RuntimeError):
    """Enumeration refused because the lattice rank exceeds the cap."""

    def __init__(self, b2: int, cap: int):
        super().__init__(
            f"enumeration refused: b2={b2} exceeds the configured cap of {cap}"
        )
        self.b2 = b2
        self.cap = cap


class ConfigParseError(ValueError):
    """Input document does not parse to a curve configuration."""

    def __init__(self, message: str, where: str | None = None):
        full = f"{where}: {message}" if where else message
        super().__init__(full)
        self.where = where
