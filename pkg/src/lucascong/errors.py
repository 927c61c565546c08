"""Exception types shared across the library."""


class InvalidArgument(ValueError):
    """An argument violates a documented precondition."""


class InvalidModulus(InvalidArgument):
    """Modulus is out of the accepted range (e.g. even where odd is required)."""


class NotInvertible(ArithmeticError):
    """A modular inverse was requested for a non-unit residue."""


class DegenerateSequence(ArithmeticError):
    """A Lucas sequence hit a zero term where the computation needs nonzero ones."""


class DivisionByZeroPoly(ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class InexactDivision(ArithmeticError):
    """Integer polynomial division left a non-integral quotient coefficient."""


class CongruenceFails(ArithmeticError):
    """A divisibility certificate did not come out exact.

    Carries the offending remainder so the counterexample (or bug) is loud.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder
