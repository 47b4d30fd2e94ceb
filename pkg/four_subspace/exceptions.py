from __future__ import annotations


class FourSubspaceError(Exception):
    """Base class for every error raised by the package."""


class DivisionByZeroError(FourSubspaceError, ZeroDivisionError):
    pass


class FieldMismatchError(FourSubspaceError, ValueError):
    pass


class UnsupportedFieldError(FourSubspaceError, ValueError):
    pass


class ReducibleModulusError(FourSubspaceError, ValueError):
    pass


class DimensionMismatchError(FourSubspaceError, ValueError):
    pass


class NotSquareError(DimensionMismatchError):
    pass


class ShapeError(FourSubspaceError, ValueError):
    pass


class QuiverMismatchError(FourSubspaceError, ValueError):
    pass


class ZeroObjectError(FourSubspaceError, ValueError):
    pass


class IndecomposabilityUndecidedError(FourSubspaceError, RuntimeError):
    pass


class NotIdempotentError(FourSubspaceError, ValueError):
    pass


class ImagePullbackError(FourSubspaceError, RuntimeError):
    pass


class SourceMismatchError(FourSubspaceError, TypeError):
    pass


class RestrictionNotContainedError(FourSubspaceError, ValueError):
    pass


class NotInC5Error(FourSubspaceError, ValueError):
    pass


class WitnessVerificationError(FourSubspaceError, RuntimeError):
    pass


class InvalidTagError(FourSubspaceError, ValueError):
    pass


class UnclassifiedSummandError(FourSubspaceError, RuntimeError):
    pass


class TooLargeError(FourSubspaceError, ValueError):
    pass


class UnmatchedClassError(FourSubspaceError, RuntimeError):
    """Raised by a census sweep when an indecomposable class has no tag.

    The offending reports are kept on the ``reports`` attribute.
    """

    def __init__(self, message: str, reports: list | None = None):
        super().__init__(message)
        self.reports = reports or []


class ParseError(FourSubspaceError, ValueError):
    """Malformed input text (files, tags, field flags)."""
