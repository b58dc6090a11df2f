"""Exceptions raised by the rigged configuration engine."""


class RiggedError(Exception):
    """Base class for engine errors."""


class ResourceLimitExceeded(RiggedError):
    """Closure generation reached the configured vertex cap."""

    def __init__(self, limit: int, what: str = "vertices"):
        self.limit = limit
        super().__init__(f"generation exceeded the cap of {limit} {what}")


class MalformedGraphError(RiggedError, ValueError):
    """Input graph has dangling edges or colors outside the node set."""


class PromotionError(RiggedError):
    """The ρ selection chain broke, or the ambient partition was left non-empty."""

    def __init__(self, k: int, length: int, message: str | None = None):
        self.k = k
        self.length = length
        super().__init__(
            message or f"no singular string of length >= {length} in rigged partition {k}"
        )


class CheckFailed(RiggedError):
    """A verification found a violation; ``witness`` describes it."""

    def __init__(self, message: str, witness: object = None):
        self.witness = witness
        super().__init__(message)
