"""Exception hierarchy for bound evaluation."""


class BoundError(Exception):
    """Base exception for all bound errors.

    All exceptions raised by shannonlab.bounds inherit from this class,
    allowing callers to catch them with a single handler.
    """


class BoundPreconditionError(BoundError):
    """Raised when a bound is requested outside the range where it holds.

    Attributes:
        bound: Name of the bound evaluator.
        reason: Description of the violated precondition.
    """

    def __init__(self, bound: str, reason: str) -> None:
        """Initialize with the bound name and the violated precondition.

        Args:
            bound: Name of the bound evaluator.
            reason: Description of the violated precondition.
        """
        self.bound = bound
        self.reason = reason
        super().__init__(f"{bound} does not apply: {reason}")
