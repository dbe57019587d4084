"""Exception hierarchy shared by every module of the package."""


class PolarfolError(Exception):
    """Base class for all package errors."""

    exit_code = 10


class ZeroInput(PolarfolError, ValueError):
    pass


class TruncationInsufficient(PolarfolError):
    """A truncated series was zero to its precision, so an order is unknown."""

    exit_code = 4

    def __init__(self, message="series vanishes to available precision", needed=None):
        super().__init__(message)
        self.needed = needed


class UnsupportedExtensionTower(PolarfolError):
    """A computation needed a second algebraic extension on top of Q(alpha)."""

    exit_code = 5

    def __init__(self, message, polynomial=None):
        super().__init__(message)
        self.polynomial = polynomial


class DegreeCapExceeded(PolarfolError):
    pass


class GenericityFailure(PolarfolError):
    exit_code = 7


class NonIsolated(PolarfolError):
    pass


class CommonComponent(PolarfolError):
    pass


class DegeneratePolar(PolarfolError):
    pass


class IsSeparatrix(PolarfolError):
    pass


class NotSeparatrix(PolarfolError):
    pass


class NotInvariant(PolarfolError):
    pass


class Dicritical(PolarfolError):
    """Raised by invariants that are only defined for non-dicritical germs."""

    exit_code = 3

    def __init__(self, message="foliation germ is dicritical", partial=None):
        super().__init__(message)
        self.partial = partial


class NotInNormalPosition(PolarfolError):
    pass


class BlowupCapExceeded(PolarfolError):
    exit_code = 8

    def __init__(self, message, tree=None):
        super().__init__(message)
        self.tree = tree


class EulerViolation(PolarfolError):
    pass


class NonHomogeneous(PolarfolError):
    pass


class DegenerateRadial(PolarfolError):
    pass


class ResidueSumNonzero(PolarfolError):
    pass


class DicriticalPointOnS(PolarfolError):
    exit_code = 3


class IncompleteSingularLocus(PolarfolError):
    exit_code = 6

    def __init__(self, message, deficit=None):
        super().__init__(message)
        self.deficit = deficit


class NoTransversalLineFound(PolarfolError):
    exit_code = 9


class ParseError(PolarfolError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
