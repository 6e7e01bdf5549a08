"""Exception types raised across the package."""


class FracPartError(Exception):
    """Base class for all package errors."""


class DomainError(FracPartError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class CapExceeded(FracPartError):
    """Enumeration would produce more witnesses than the caller allowed."""


class EnumerationTooLarge(FracPartError):
    """The search space exceeds the hard enumeration limit."""


class NoWitness(FracPartError):
    """No partition exists for the requested (j, k)."""


class EmptySequence(FracPartError, ValueError):
    pass


class IntegralityViolation(FracPartError, ArithmeticError):
    """A Rascal-triangle division left a remainder."""


class NotCoprime(FracPartError, ValueError):
    pass


class PrecisionExhausted(FracPartError, ArithmeticError):
    """Cancellation consumed every significant bit at the available precision."""


class PrefixSumTooLarge(FracPartError):
    pass
