"""Exception types shared across the package."""

from __future__ import annotations


class RingSpecError(ValueError):
    """A ring description could not be parsed or is not a valid finite ring."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ShapeError(ValueError):
    """An element or vector does not belong to the ring it is used with."""


class PreconditionError(ValueError):
    """An operation was called outside its mathematical domain."""


class CapExceeded(RuntimeError):
    """An instance is larger than the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
