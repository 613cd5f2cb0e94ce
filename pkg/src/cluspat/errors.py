"""Exception types shared across the engine."""


class ClusterEngineError(Exception):
    """Base class for all engine-specific errors."""


class DimensionError(ClusterEngineError):
    """Operands live in rings or groups of different dimensions."""


class NotDivisibleError(ClusterEngineError):
    """Exact division failed; carries the offending remainder term."""

    def __init__(self, message, remainder_term=None):
        super().__init__(message)
        self.remainder_term = remainder_term


class SpecializationError(ClusterEngineError):
    """Evaluation at y = 0 hit a negative y-exponent."""


class NotPointedError(ClusterEngineError):
    """An expansion has no unique coefficient-one y-free term."""

    def __init__(self, message, word=None, position=None):
        super().__init__(message)
        self.word = word
        self.position = position


class NotSkewSymmetrizableError(ClusterEngineError):
    """No positive integer diagonal symmetrizes the matrix."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LaurentViolationError(ClusterEngineError):
    """A mutation quotient was not exact in the Laurent ring."""

    def __init__(self, message, word=None, direction=None):
        super().__init__(message)
        self.word = word
        self.direction = direction


class NotExploredError(ClusterEngineError):
    """A vertex outside the explored region was requested."""


class UnreducedWordError(ClusterEngineError):
    """A mutation word repeats a direction consecutively."""


class UnknownVariableError(ClusterEngineError):
    """A variable id is not present in the registry."""


class SeedFileError(ClusterEngineError):
    """A seed definition file failed validation."""
