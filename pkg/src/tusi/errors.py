"""Exception hierarchy shared by every module in the package."""


class TusiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TusiError, ValueError):
    """Malformed input: non-finite coefficients, wrong shape of equation, bad degree."""


class PreconditionError(TusiError, ValueError):
    """An operation was called outside the domain it is defined on."""


class RegimeError(TusiError):
    """The requested method does not apply to the root regime of the input.

    The canonical case is asking for the closed form on a cubic with three
    distinct real roots, where the radicals would have to pass through
    complex numbers.
    """


class ConvergenceError(TusiError, ArithmeticError):
    """An iterative solver hit its iteration cap.

    ``bracket`` holds the best enclosing interval reached so far.
    """

    def __init__(self, message, bracket=None, iterations=0):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


class DerivativeVanishesError(TusiError, ArithmeticError):
    """Newton step requested where the derivative is numerically zero."""
