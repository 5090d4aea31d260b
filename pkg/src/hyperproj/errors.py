"""Exception types shared across the package."""


class InvalidInput(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class DomainError(InvalidInput):
    """A scalar argument lies outside the domain of a formula."""


class InvariantViolation(RuntimeError):
    """An internal guarantee failed; indicates a bug, not bad input."""


class Indeterminate(RuntimeError):
    """Interval enclosures could not separate at the precision ceiling."""
