"""Exception hierarchy shared by all modules."""


class CoordinationError(Exception):
    """Base class for every error raised by this package."""


# exact core
class DivisionByNonUnit(CoordinationError, ZeroDivisionError):
    pass


class CompositionNonNilpotent(CoordinationError, ValueError):
    pass


class NotReversible(CoordinationError, ValueError):
    pass


class SqrtUnsupportedConstantTerm(CoordinationError, ValueError):
    pass


class NotSquare(CoordinationError, ValueError):
    pass


class BadIndexSet(CoordinationError, IndexError):
    pass


class InsufficientOrder(CoordinationError, ValueError):
    pass


# riordan
class ImproperLeftFactor(CoordinationError, ValueError):
    pass


class ImproperArray(CoordinationError, ValueError):
    pass


# lattice
class DegenerateRecurrence(CoordinationError, ZeroDivisionError):
    pass


# zeros
class EndpointIsRoot(CoordinationError, ValueError):
    pass


class NonSquarefree(CoordinationError, ValueError):
    pass


class SharedRootWithBoundary(CoordinationError, ValueError):
    pass


class CommonRoot(CoordinationError, ValueError):
    pass


class DegreeMismatch(CoordinationError, ValueError):
    pass


class RefinementLimitExceeded(CoordinationError, RuntimeError):
    pass


# analytics / positivity
class NegativeCoefficient(CoordinationError, ValueError):
    pass


class NotLowerTriangular(CoordinationError, ValueError):
    pass
