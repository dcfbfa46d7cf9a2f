"""Exception types shared across the package."""


class AhcurvError(Exception):
    """Base class for package-specific errors."""


class DimensionTooSmall(AhcurvError, ValueError):
    """Complex dimension below the minimum an operation supports."""


class ShapeError(AhcurvError, ValueError):
    """Operands with inconsistent array shapes."""


class DegenerateSample(AhcurvError, RuntimeError):
    """Random sampling failed to produce a usable value after retries."""


class DegeneratePlane(AhcurvError, ValueError):
    """Spanning vectors that do not determine a 2-plane."""


class InvalidArgument(AhcurvError, ValueError):
    """Argument violates an operation's precondition."""


class NoSolution(AhcurvError, RuntimeError):
    """Constraint system admits no nontrivial solution."""


class NumericalFailure(AhcurvError, RuntimeError):
    """An a-posteriori numerical check failed."""


class HypothesisNotSatisfied(AhcurvError, RuntimeError):
    """Input tensor violates the plane-invariance condition it was assumed to satisfy."""

    def __init__(self, message, max_dev=None):
        super().__init__(message)
        self.max_dev = max_dev


class Inconclusive(AhcurvError, RuntimeError):
    """Kernel dimension did not stabilize within the configured enlargements."""


class FileFormatError(AhcurvError, ValueError):
    """Malformed tensor or report file."""
