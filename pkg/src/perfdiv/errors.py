"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph construction or an operation applied to bad arguments."""


class ParseError(ValueError):
    """Malformed graph encoding. ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class CapabilityError(RuntimeError):
    """An exhaustive search would exceed one of the configured size caps."""

    def __init__(self, cap, limit, requested):
        super().__init__(f"{cap} cap exceeded: limit {limit}, requested {requested}")
        self.cap = cap
        self.limit = limit
        self.requested = requested


class PreconditionError(ValueError):
    """The subject does not satisfy what the operation presupposes."""
