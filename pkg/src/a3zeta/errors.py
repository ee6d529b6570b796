"""Exception hierarchy shared by every module."""


class A3ZetaError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(A3ZetaError, ValueError):
    """An argument lies outside the supported domain."""


class ConvergenceError(A3ZetaError, ValueError):
    """A series was requested outside its region of absolute convergence."""


class SingularityError(A3ZetaError, ValueError):
    """Specialisation hit a pole (for example zeta(1))."""


class CollapseError(A3ZetaError, RuntimeError):
    """The left-hand-side simplification did not reach a single series."""
