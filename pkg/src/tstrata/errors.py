"""Exception types shared across the package."""


class DomainError(ValueError):
    """Invalid input or violated precondition, named in the message."""


class InvariantError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad input."""
