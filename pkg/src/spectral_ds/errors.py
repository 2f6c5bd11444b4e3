"""Exception types shared across the package."""

from __future__ import annotations


class SpectralDSError(Exception):
    """Base class for domain errors raised by this package."""


class CapacityError(SpectralDSError, ValueError):
    """A size parameter exceeds a hard capacity or cost guard."""


class GraphArgumentError(SpectralDSError, ValueError):
    """An argument is outside the domain of an operation."""


class Graph6Error(SpectralDSError, ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class SwitchingSetError(SpectralDSError, ValueError):
    """The vertex set is not a valid Godsil-McKay switching set."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class ContractViolation(SpectralDSError, AssertionError):
    """A construction failed its own spectral verification."""


class ClassificationError(SpectralDSError, AssertionError):
    """An exhaustive survey disagreed with the expected classification."""
