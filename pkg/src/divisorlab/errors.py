"""Exception hierarchy shared by every divisorlab module."""


class DivisorLabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DivisorLabError):
    """Argument outside the supported evaluation domain."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ConvergenceError(DivisorLabError):
    """An iterative scheme failed to reach its accuracy target."""


class RangeError(DivisorLabError):
    """Index or parameter outside the validity range of a table or bound."""


class InsufficientDataError(DivisorLabError):
    """Too few usable data points for a fit."""


class CapacityError(DivisorLabError):
    """A resource allocation (typically table memory) failed."""
