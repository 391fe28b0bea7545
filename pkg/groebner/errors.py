from algebra.errors import AlgebraError


class GroebnerError(AlgebraError):
    """Base class for failures inside a basis computation."""


class SignatureCollisionError(GroebnerError):
    """Raised when both halves of a critical pair carry the same signature.

    Such pairs are always rewritable; reaching the S-polynomial means a
    criterion let one through.
    """


class InvariantViolation(GroebnerError):
    """Raised when a run-time invariant check fails."""


class ComputationLimitExceeded(GroebnerError):
    def __init__(self, limit: int, processed: int):
        self.limit = limit
        self.processed = processed
        super().__init__(f"processed {processed} critical pairs, limit is {limit}")
