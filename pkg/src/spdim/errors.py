"""Exception hierarchy shared by all spdim modules."""


class SpdimError(Exception):
    """Base class for all errors raised by spdim."""


class BadParameters(SpdimError, ValueError):
    """Invalid (p, g, c, eps) or malformed input data."""


class RankMismatch(SpdimError, ValueError):
    """Two weights of different rank were combined."""


class NotDominant(SpdimError, ValueError):
    """A weight required to be dominant is not."""


class PrecisionExhausted(SpdimError, ArithmeticError):
    """A rounded trigonometric sum was not close enough to an integer."""


class ParityViolation(SpdimError, ArithmeticError):
    """D + (-1)^eps * delta came out odd, so the half is not integral."""


class NonIntegralResult(SpdimError, ArithmeticError):
    """An exact rational that must be an integer failed to clear its denominator."""


class NoSuchFormula(SpdimError, LookupError):
    """No closed-form polynomial is tabulated for the requested rank/case."""


class InsufficientPoints(SpdimError, ValueError):
    """Too few sample points for the requested interpolation degree."""


class WeightUndefined(SpdimError, LookupError):
    """The closed-form highest weight needs a fundamental weight of negative index."""


class EmptyModule(SpdimError, LookupError):
    """Operation requires a nonempty weight multiset."""


class NoUniqueMaximum(SpdimError, ArithmeticError):
    """The weight multiset has no unique dominance-maximal element of multiplicity one."""


class ListCapExceeded(SpdimError, RuntimeError):
    """A coloring listing was refused because it would exceed the configured cap."""
