"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class SizeCapError(DomainError):
    """An exhaustive operation was asked for a size beyond its cap."""


class ConsistencyError(ArithmeticError):
    """An internal exactness check failed (e.g. a division left a remainder).

    This should never fire; if it does, some identity the code relies on is wrong.
    """


class InconclusiveError(RuntimeError):
    """A refinement loop ran out of budget before certifying an answer."""
