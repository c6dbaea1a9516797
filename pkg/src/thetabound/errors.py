class ThetaBoundError(Exception):
    """Base class for all library errors."""


class NonUnitConstantTerm(ThetaBoundError, ValueError):
    pass


class BadParams(ThetaBoundError, ValueError):
    pass


class BadOrder(ThetaBoundError, ValueError):
    pass


class CaseMismatch(ThetaBoundError, ValueError):
    pass


class NotCoprime(ThetaBoundError, ValueError):
    pass


class RangeError(ThetaBoundError, IndexError):
    pass


class UnknownPolynomial(ThetaBoundError, KeyError):
    pass


class LeadingNotPositive(ThetaBoundError, ArithmeticError):
    pass


class BudgetExceeded(ThetaBoundError, RuntimeError):
    pass


class UsageError(ThetaBoundError, ValueError):
    exit_code = 2
