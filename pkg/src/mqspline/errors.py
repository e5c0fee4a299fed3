"""Exception types shared across the library."""


class MqsError(Exception):
    """Base class for all library errors."""


class CollinearPoints(MqsError):
    """The three points lie (numerically) on a single line."""


class CoincidentEndpoints(MqsError):
    """First and last points of a triple coincide; no frame can be built."""


class NoRootInUnitInterval(MqsError):
    """The cubic solve produced no root in (0, 1); internal error for valid input."""


class DomainError(MqsError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateCurve(MqsError):
    """Quadratic coefficients describe a straight-line traversal."""


class ZeroSpeed(MqsError):
    """Curve speed vanished where a regular point was required."""


class QuadratureDivergence(MqsError):
    """Adaptive quadrature exhausted its subdivision budget without converging."""


class TooFewPoints(MqsError):
    """Spline construction needs at least two points."""


class ParseError(MqsError):
    """Point-set file could not be parsed; carries a location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class ValidationError(MqsError):
    """Point-set file parsed but violates a structural constraint."""
