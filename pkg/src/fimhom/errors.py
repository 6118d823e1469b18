class UsageError(ValueError):
    """A precondition of a public operation was violated by the caller."""


class InvariantError(RuntimeError):
    """An internal invariant failed; indicates a bug or corrupt input data."""


class FormatError(UsageError):
    """A module or config file could not be parsed."""
