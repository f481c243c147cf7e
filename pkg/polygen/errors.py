"""Exception hierarchy shared by every polygen layer."""


class PolygenError(Exception):
    """Base class for all errors raised by polygen."""


class NumericalError(PolygenError, ArithmeticError):
    """A computation left the domain where double precision is meaningful."""


class NonFiniteError(NumericalError):
    pass


class CoefficientOverflowError(NonFiniteError):
    pass


class NoConvergenceError(NumericalError):
    def __init__(self, iterations: int, residual: float) -> None:
        super().__init__(
            f"Root iteration did not converge after {iterations} iterations "
            f"(max residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


class ZeroCoefficientError(NumericalError, ZeroDivisionError):
    """A coefficient the recursion divides by vanished."""


class DegreeError(PolygenError, ValueError):
    pass


class PermutationIndexError(PolygenError, ValueError):
    pass


class SeedSpecError(PolygenError, ValueError):
    pass


class OrderingRuleError(PolygenError, ValueError):
    pass


class GenerationSpecError(PolygenError, ValueError):
    pass


class CardinalityMismatchError(PolygenError, ValueError):
    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"Cardinality mismatch: expected {expected}, got {got}")
        self.expected = expected
        self.got = got


class TrajectoryTooShortError(PolygenError, ValueError):
    pass


class UnknownPresetError(PolygenError, KeyError):
    pass


class ConfigError(PolygenError, ValueError):
    pass
