"""Exact computation and verification of Boolean-Narayana numbers."""

from .errors import ConsistencyError, DomainError, InconclusiveError, SizeCapError

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "DomainError",
    "InconclusiveError",
    "SizeCapError",
]
