"""Exception hierarchy.

Errors fall into three families, which the command line maps to exit codes:
input errors (malformed documents), limit errors (a configured size bound was
hit) and domain errors (the request has no answer, or an internal consistency
check failed).
"""


class UnarySumError(Exception):
    """Base class for every error raised by this package."""


class InputError(UnarySumError):
    pass


class LimitError(UnarySumError):
    pass


class DomainError(UnarySumError):
    pass


class ParseError(InputError):
    pass


class ShapeError(InputError):
    pass


class CapacityExceeded(LimitError):
    pass


class ModulusTooLarge(LimitError):
    pass


class Overflow(LimitError):
    pass


class TooLarge(LimitError):
    pass


class NotInvertible(DomainError):
    pass


class ZeroInverse(NotInvertible):
    pass


class OddPrimeRequired(DomainError):
    pass


class OrderNotDividing(DomainError):
    pass


class PrimeTooSmall(DomainError):
    pass


class FieldTooSmall(DomainError):
    pass


class NonRationalSum(DomainError):
    """A character sum that must be a constant had surviving higher terms."""


class DivisibilityViolation(DomainError):
    pass


class DuplicatePrime(DomainError):
    pass


class ZeroCount(DomainError):
    pass


class NoSolution(DomainError):
    pass


class NoFeasibleSubset(DomainError):
    pass
