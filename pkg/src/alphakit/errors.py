"""Exception hierarchy shared by all alphakit modules."""


class AlphaKitError(Exception):
    """Base class for every error raised by alphakit."""


class DomainError(AlphaKitError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class CoincidenceError(DomainError):
    """Green-type kernel evaluated on its diagonal z == w."""


class RangeError(DomainError):
    """A composed map left the unit disk at a requested point."""


class ConvergenceError(AlphaKitError, ArithmeticError):
    """A series or iteration did not reach the requested accuracy."""


class PreconditionError(AlphaKitError):
    """A hypothesis of a theorem being checked does not hold for the input."""
