"""Exception hierarchy shared across the toolkit."""


class QGeomError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidConstantError(QGeomError):
    """A fundamental constant is non-positive or non-finite."""


class InvalidSpinError(QGeomError):
    """Spin is negative or not a multiple of 1/2."""


class CapacityError(QGeomError):
    """Requested dense representation exceeds the dimension cap."""


class ShapeError(QGeomError):
    """State vector and representation dimensions disagree."""


class DegeneracyError(QGeomError):
    """Top eigenvalue is numerically degenerate."""


class InvalidSeparationError(QGeomError):
    """Separation or radius argument is non-positive."""


class UndersamplingError(QGeomError):
    """Sample rate too low to resolve the coherence window."""


class InsufficientDurationError(QGeomError):
    """Time series too short for the requested operation."""


class InsufficientDataError(QGeomError):
    """Requested lag range exceeds what the series supports."""


class SegmentationError(QGeomError):
    """Invalid Welch segmentation parameters."""


class InvalidGridError(QGeomError):
    """Frequency grid is not non-negative and increasing."""


class InvalidBandError(QGeomError):
    """Frequency band is empty or inverted."""


class InvalidMassError(QGeomError):
    """Mass argument is non-positive."""


class InvalidInputError(QGeomError):
    """Generic invalid numeric input."""
