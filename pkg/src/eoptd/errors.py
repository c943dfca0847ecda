"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    """Input has the wrong shape, range or type."""


class SymmetryViolation(ValueError):
    """A design that was required to be symmetric is not."""


class SingularityError(ArithmeticError):
    """A matrix (or moment triple) that must be nonsingular is singular."""


class ConvergenceError(RuntimeError):
    """An iterative routine hit its iteration cap."""
