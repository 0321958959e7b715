"""Exception hierarchy shared by every module."""


class AnomalousCancellationError(Exception):
    pass


class DomainError(AnomalousCancellationError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PositionError(AnomalousCancellationError, IndexError):
    """A digit position does not exist in the canonical numeral."""


class QueryError(AnomalousCancellationError, ValueError):
    """A cancellation query cannot be posed (bad radix, position or n' = 0)."""


class VerificationError(AnomalousCancellationError, AssertionError):
    """A constructed solution failed exact re-verification. Always a bug."""


class WorkEstimateExceeded(AnomalousCancellationError):
    def __init__(self, estimate, cap):
        self.estimate = estimate
        self.cap = cap
        super().__init__(
            f"work estimate {estimate} checks exceeds cap {cap}; "
            "narrow the scope or raise the cap"
        )
