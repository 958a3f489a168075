"""Exception types shared across the package."""


class SuperoscError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(SuperoscError):
    """Operands have incompatible shapes or lengths."""


class NotPositiveDefinite(SuperoscError):
    """A pivot <= 0 arose while factoring a matrix that must be SPD.

    Usually means duplicate prescribed times or insufficient working
    precision for the conditioning of the problem.
    """


class NoConvergence(SuperoscError):
    """An iterative solver hit its iteration cap (precision too low)."""


class NotConverged(SuperoscError):
    """A limit estimate failed its convergence criterion."""


class DuplicateTimes(SuperoscError):
    """Prescribed times are equal or too close to separate at the
    working precision."""


class TooManyPoints(SuperoscError):
    """More interpolation constraints than the dimension of the
    function space."""


class DegenerateFit(SuperoscError):
    """A least-squares fit was requested on degenerate data."""


class ParseError(SuperoscError):
    """Malformed point or file input."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %s: %s" % (line, message)
        super().__init__(message)


class NonFiniteValue(SuperoscError):
    """A sampled function value was inf or nan."""


class EmptyGridAfterZeroGuard(SuperoscError):
    """Every grid sample fell below the zero guard of a relative
    comparison."""
