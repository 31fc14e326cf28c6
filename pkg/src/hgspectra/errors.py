"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input fails a structural precondition (bad edge, index out of range, ...)."""


class LimitExceededError(RuntimeError):
    """Instance is larger than a configured exhaustive-search or budget cap."""


class SolverError(RuntimeError):
    """An iterative solver cannot produce any usable result."""


class CertificationError(RuntimeError):
    """A result failed its independent re-verification (residual or bound check)."""
