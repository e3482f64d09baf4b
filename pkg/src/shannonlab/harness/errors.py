"""Exception hierarchy for the experiment harness."""

from pathlib import Path


class HarnessError(Exception):
    """Base exception for all harness errors.

    The CLI maps every HarnessError to exit code 2.
    """


class ExperimentConfigError(HarnessError):
    """Raised when an experiment specification is invalid.

    Attributes:
        field: Name of the offending specification field.
        reason: Description of the problem.
    """

    def __init__(self, field: str, reason: str) -> None:
        """Initialize with the offending field and reason.

        Args:
            field: Specification field name.
            reason: Description of the problem.
        """
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid experiment setting {field}: {reason}")


class ResultOutputError(HarnessError):
    """Raised when a result table or run summary cannot be written.

    Attributes:
        path: Destination that failed.
        reason: Description of the failure.
    """

    def __init__(self, path: Path, reason: str) -> None:
        """Initialize with the destination and reason.

        Args:
            path: Destination path.
            reason: Description of the failure.
        """
        self.path = path
        self.reason = reason
        super().__init__(f"Cannot write results to {path}: {reason}")
