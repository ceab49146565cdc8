"""Exception hierarchy shared by all modules."""


class CabCodesError(Exception):
    """Base class for library errors."""


class NonPrimeBase(CabCodesError, ValueError):
    pass


class SizeExceeded(CabCodesError):
    """A desk-scale guard was hit; the message names the guard."""


class MixedFields(CabCodesError, TypeError):
    pass


class DivisionByZero(CabCodesError, ZeroDivisionError):
    pass


class ArityMismatch(CabCodesError, ValueError):
    pass


class ZeroPolynomial(CabCodesError, ValueError):
    pass


class ZeroDivisor(CabCodesError, ZeroDivisionError):
    pass


class InfiniteFootprint(CabCodesError, ValueError):
    pass


class PairBudgetExceeded(CabCodesError):
    pass


class NotARepresentative(CabCodesError, ValueError):
    pass


class EqualDegrees(CabCodesError, ValueError):
    pass


class WeightViolation(CabCodesError, ValueError):
    pass


class NotInFootprint(CabCodesError, ValueError):
    pass


class IndexNotInSupport(CabCodesError, ValueError):
    pass


class BadV(CabCodesError, ValueError):
    pass


class ExclusionOutOfRange(CabCodesError, ValueError):
    pass


class BadRange(CabCodesError, ValueError):
    pass


class EqualIndices(CabCodesError, ValueError):
    pass


class RankDeficient(CabCodesError):
    pass


class DependentInput(CabCodesError, ValueError):
    pass


class EmptyCode(CabCodesError):
    pass


class SingularBasis(CabCodesError, ValueError):
    pass


class ParseError(CabCodesError, ValueError):
    pass
