"""Exceptions raised across cvqss.

Everything derives from a builtin so callers that only know about
ValueError/RuntimeError keep working.
"""


class ValidationError(ValueError):
    """An input violates an invariant or precondition."""


class EnumerationError(ValidationError):
    """Too many modes to enumerate every player subset."""


class DecodabilityError(ValidationError):
    """An operation required a decodable party and got one that is not."""


class SynthesisError(RuntimeError):
    """A decoder construction failed to converge."""


class UsageError(ValueError):
    """Command line arguments are inconsistent."""
