"""Exception hierarchy shared by every module of the package."""


class LandenError(Exception):
    """Base class for all errors raised by :mod:`landen`."""


class InvalidInputError(LandenError, ValueError):
    """Coefficients outside the domain where the integral converges."""


class DegenerateInputError(LandenError, ValueError):
    """Input sits on a boundary where a derived quantity is undefined."""


class NoConvergenceError(LandenError, RuntimeError):
    """An iteration hit ``max_iter`` before meeting its tolerance."""


class InsufficientDataError(LandenError, ValueError):
    """Too few usable points to fit a convergence rate."""


class ToleranceNotMetError(LandenError, RuntimeError):
    """Adaptive quadrature could not certify the requested accuracy."""


class QuadratureFailureError(ToleranceNotMetError):
    """A singular integral could not be brought to the requested accuracy."""
