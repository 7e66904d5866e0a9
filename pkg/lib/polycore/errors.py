# -*- coding: utf-8 -*-


class PolynomialError(ValueError):
    """Invalid polynomial input (zero where nonzero is required, bad degree...)."""


class ArityError(PolynomialError):
    """Point or shift vector does not match the variable list."""


class UnknownVariableError(PolynomialError):
    """Variable not in the polynomial's variable list."""


class PolynomialParseError(PolynomialError):
    """Text that is not a polynomial in the explicit monomial-sum format."""


class NotDivisibleError(PolynomialError):
    """Exact quotient requested where the divisor does not divide."""
