"""Shared exception types."""


class UnsupportedComputationError(RuntimeError):
    """Raised when no exact answer is implemented for the requested inputs.

    Invalid inputs raise ValueError instead; this exception is reserved for
    well-formed requests that fall outside the supported theory (general
    relation patterns, nonsingularity tests with no exact decision procedure,
    and so on).
    """
