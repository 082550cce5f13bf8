"""Exception hierarchy shared by every module of the package."""


class LatticeError(Exception):
    """Base class for all package errors."""


class ValidationError(LatticeError, ValueError):
    """Input does not satisfy the preconditions of an operation."""


class TwinValidationError(ValidationError):
    """Two vectors do not form a lattice square.

    ``condition`` names the violated requirement: ``"dimension"``,
    ``"zero"``, ``"norm"`` or ``"orthogonality"``.
    """

    def __init__(self, condition, message):
        super().__init__(message)
        self.condition = condition


class FrameValidationError(ValidationError):
    """Rows do not form an orthogonal equal-norm frame.

    ``pair`` holds the offending row indices (0-based) when relevant.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DegeneratePlaneError(ValidationError):
    """A plane descriptor does not span a two dimensional space."""


class GramNotSquareError(LatticeError):
    """The Gram determinant of a vector family is not a perfect square."""

    def __init__(self, determinant):
        super().__init__(f"Gram determinant {determinant} is not a perfect square")
        self.determinant = determinant


class NonIntegralFitError(LatticeError):
    """An interpolating polynomial has non-integer coefficients."""

    def __init__(self, coefficients):
        super().__init__(f"interpolation produced non-integer coefficients {coefficients}")
        self.coefficients = coefficients


class SearchBudgetExceeded(LatticeError):
    """A bounded search ended without finding what it was looking for."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class InvariantViolation(LatticeError, AssertionError):
    """An internal consistency check failed; indicates a bug or an unexpected input class."""


class OracleMismatch(LatticeError):
    """Brute-force counts disagree with a fitted polynomial or a closed form."""

    def __init__(self, message, counts=None, open_counts=None):
        super().__init__(message)
        self.counts = counts
        self.open_counts = open_counts
