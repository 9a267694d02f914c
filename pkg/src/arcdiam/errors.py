"""Exception types shared across the package."""


class ArcDiamError(Exception):
    """Base class for all package errors."""


class NotAPrimePower(ArcDiamError, ValueError):
    pass


class DivisionByZero(ArcDiamError, ZeroDivisionError):
    pass


class DimensionTooSmall(ArcDiamError, ValueError):
    pass


class ParameterTooSmall(ArcDiamError, ValueError):
    pass


class IndexOutOfRange(ArcDiamError, IndexError):
    pass


class SelfLoop(ArcDiamError, ValueError):
    pass


class Identical(ArcDiamError, ValueError):
    """Raised when intersecting a line with itself."""


class Disconnected(ArcDiamError):
    """Diameter of a disconnected graph is undefined; never reported as inf."""


class NonInvertible(ArcDiamError, ValueError):
    pass


class ShapeMismatch(ArcDiamError, ValueError):
    pass


class NotAnAutomorphism(ArcDiamError):
    def __init__(self, generator_index, edge):
        self.generator_index = generator_index
        self.edge = edge
        super().__init__(
            f"generator {generator_index} does not preserve edge {edge}")


class BudgetExceeded(ArcDiamError):
    pass


class InexactDivision(ArcDiamError, ArithmeticError):
    pass


class EpsOutOfRange(ArcDiamError, ValueError):
    pass


class UndecidedComparison(ArcDiamError, ArithmeticError):
    """Interval refinement hit its iteration cap without separating the sides."""
