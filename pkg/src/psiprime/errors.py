"""Exception types shared by the whole package."""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class SizeLimitError(ValueError):
    """A computation would exceed a documented size cap."""


class ConsistencyError(ArithmeticError):
    """An internal exactness check failed (e.g. a checked division left a
    remainder).  Signals a formula transcription bug, never bad user input."""


class NotationError(DomainError):
    """Unparseable group/partition notation.  Carries the offset of the
    first offending character so front ends can point at it."""

    def __init__(self, message: str, position: int):
        super().__init__(f"position {position}: {message}")
        self.position = position
