"""Exception taxonomy shared by the package."""


class HeckeError(Exception):
    """Base class for all package errors."""


class NotDivisible(HeckeError, ArithmeticError):
    pass


class DivisionByZero(HeckeError, ZeroDivisionError):
    pass


class ZeroBase(HeckeError, ValueError):
    """Evaluation of a Laurent polynomial at q = 0."""


class UnsupportedOrder(HeckeError, ValueError):
    pass


class NoSuchDiagram(HeckeError, ValueError):
    pass


class IndexOutOfRange(HeckeError, IndexError):
    pass


class ConsecutiveIndices(HeckeError, ValueError):
    pass


class UnreducibleWord(HeckeError, ValueError):
    pass


class SizeMismatch(HeckeError, ValueError):
    pass


class DegenerateEigenvalues(HeckeError, ValueError):
    pass


class ConstructionFailed(HeckeError, RuntimeError):
    pass


class ResidualDenominator(HeckeError, ArithmeticError):
    pass


class TooManyRows(HeckeError, ValueError):
    pass


class MalformedSpectrum(HeckeError, ValueError):
    pass
