"""Exception types raised across the package."""

from __future__ import annotations


class LefschetzError(Exception):
    """Base class for all errors raised by this package."""


class NotAnOSequence(LefschetzError, ValueError):
    def __init__(self, values):
        self.values = tuple(values)
        super().__init__(f"not an O-sequence: {list(self.values)}")


class NotArtinianByCap(LefschetzError):
    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"quotient does not vanish in any degree <= {cap}")


class FormInIdeal(LefschetzError):
    """The form reduces to zero modulo the ideal in its own degree."""


class NotMonomialIdeal(LefschetzError, ValueError):
    pass


class ExhaustiveTooLarge(LefschetzError):
    def __init__(self, count: int, budget: int):
        self.count = count
        self.budget = budget
        super().__init__(f"exhaustive enumeration needs {count} forms, budget is {budget}")


class DimensionMismatch(LefschetzError, ValueError):
    pass


class PolynomialSyntaxError(LefschetzError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")


class NotHomogeneous(LefschetzError, ValueError):
    pass


class UnknownVariable(LefschetzError, ValueError):
    pass


class ZeroPolynomial(LefschetzError, ValueError):
    pass
