"""Exception types shared across the package."""
from __future__ import annotations

from lsnc._numeric import AmbiguousGroupingError

__all__ = [
    "AmbiguousGroupingError",
    "CertificateMismatchError",
    "PatternMismatchError",
    "CompletionError",
    "SearchBudgetExceeded",
]


class CertificateMismatchError(RuntimeError):
    """A claimed combinatorial certificate failed its runtime check."""


class PatternMismatchError(ValueError):
    """Input grid does not exhibit the structure a construction requires."""


class CompletionError(RuntimeError):
    """A construction step that should always succeed did not; indicates a
    violated precondition or an internal inconsistency."""


class SearchBudgetExceeded(RuntimeError):
    """Backtracking search hit its node budget before reaching an answer."""
