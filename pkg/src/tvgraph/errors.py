"""Exception and warning types shared across the package."""


class TvGraphError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(TvGraphError):
    pass


class IndexOutOfRange(TvGraphError):
    pass


class TooFewPoints(TvGraphError):
    pass


class WrongDimension(TvGraphError):
    pass


class NotConvexPosition(TvGraphError):
    pass


class SizeMismatch(TvGraphError):
    pass


class InvalidArguments(TvGraphError):
    pass


class PartitionMismatch(TvGraphError):
    pass


class NotTverberg(TvGraphError):
    pass


class NotRadon(TvGraphError):
    pass


class NoPathFound(TvGraphError):
    pass


class TooManyPartitions(TvGraphError):
    pass


class UnsupportedFormat(TvGraphError):
    pass


class DegenerateAfterRetries(TvGraphError):
    pass


class HypothesisViolatedWarning(UserWarning):
    """A closed form was requested outside its stated hypothesis; an
    enumeration fallback produced the returned value."""
