class MilnorZetaError(Exception):
    pass


class InputError(MilnorZetaError, ValueError):
    """Malformed or out-of-range input."""


class ValidationError(InputError):
    """A curve configuration violates Bezout or genus bounds."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class UnsupportedDimensionError(InputError):
    pass


class ConsistencyError(MilnorZetaError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class DegenerateFaceError(MilnorZetaError):
    def __init__(self, message: str, face=None):
        super().__init__(message)
        self.face = face


class NotASuspensionError(MilnorZetaError, ValueError):
    """The divisor has no exact pre-image under the join with a power."""


class GraphInvariantError(MilnorZetaError, RuntimeError):
    pass
