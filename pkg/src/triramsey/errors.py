"""Exception types shared across the package."""


class TriramseyError(Exception):
    """Base class for all errors raised by this package."""


class ConstructionError(TriramseyError, ValueError):
    """A graph or vertex set was built from invalid input."""


class CapacityError(TriramseyError):
    """An operation would exceed the fixed vertex capacity MAX_N."""


class DecodeError(TriramseyError, ValueError):
    """A serialized graph could not be parsed.

    ``offset`` is the byte position at which decoding failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class IntegrityError(TriramseyError):
    """A persisted file or resumed search frontier failed validation."""


class SpecConflictError(TriramseyError):
    """A checkpoint was written for different search parameters."""
