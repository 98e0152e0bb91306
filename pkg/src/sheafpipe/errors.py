"""Exception types shared across the package.

Every error raised by the library derives from :class:`SheafpipeError`, so
callers can catch one base class. Errors that carry a mathematical witness
(the object demonstrating the failure) expose it as ``.witness``.
"""

from __future__ import annotations


class SheafpipeError(Exception):
    """Base class for all library errors."""


class SchemaError(SheafpipeError):
    """A JSON document does not match the expected schema."""


class SpaceError(SheafpipeError):
    """A vector, map, or measure was used with a space it does not belong to."""


class CompositionError(SheafpipeError):
    """Two maps were composed whose middle objects do not match."""


class ClosureError(SheafpipeError):
    """A face list is not downward closed. ``missing`` lists absent subfaces."""

    def __init__(self, message: str, missing=()):  # missing: sequence of Simplex
        super().__init__(message)
        self.missing = tuple(missing)


class ViolationError(SheafpipeError):
    """A structural law failed; ``witness`` is the offending item."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class WindowRequired(SheafpipeError):
    """An operation over an infinite carrier needs an explicit finite window."""


class IntervalError(SheafpipeError):
    """An interval has endpoints out of order."""


class CommutationError(SheafpipeError):
    """A square of maps that must commute does not; ``witness`` is the point."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class FunctorError(SheafpipeError):
    """A functor was applied to data outside its source category."""


class BoundError(SheafpipeError):
    """An enumeration or product construction exceeded its configured bound."""


class IncompleteSheafError(SheafpipeError):
    """A sheaf is missing a stalk or a restriction map."""


class IncompleteAssignmentError(SheafpipeError):
    """An assignment or pipeline run lacks a value for some face or sensor."""


class AnalyticMissing(SheafpipeError):
    """No analytic is configured for the requested sensor/variable pair."""


class PayloadError(SheafpipeError):
    """A reading's payload does not match the sensor's declared raw format."""


class ConfigError(SheafpipeError):
    """A pipeline configuration is self-contradictory."""


class DomainError(SheafpipeError):
    """A cooking map received a value outside its declared domain."""
