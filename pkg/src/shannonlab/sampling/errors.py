"""Exception hierarchy for sampling, noise and sample-file handling."""


class SamplingError(Exception):
    """Base exception for all sampling errors.

    All exceptions raised by shannonlab.sampling inherit from this class,
    allowing callers to catch them with a single handler.
    """


class IndexRangeError(SamplingError):
    """Raised when a sample set does not cover a required index range.

    Attributes:
        k_min: First index held by the sample set.
        k_max: Last index held by the sample set.
        required_min: First index the operation needs.
        required_max: Last index the operation needs.
    """

    def __init__(
        self, k_min: int, k_max: int, required_min: int, required_max: int
    ) -> None:
        """Initialize with the held and the required index ranges.

        Args:
            k_min: First held index.
            k_max: Last held index.
            required_min: First required index.
            required_max: Last required index.
        """
        self.k_min = k_min
        self.k_max = k_max
        self.required_min = required_min
        self.required_max = required_max
        super().__init__(
            f"Samples cover [{k_min}, {k_max}] but "
            f"[{required_min}, {required_max}] is required"
        )


class SampleFormatError(SamplingError):
    """Raised when a sample file cannot be parsed.

    Attributes:
        line_number: 1-based line of the offending entry, None if unknown.
        reason: Description of the problem.
    """

    def __init__(self, line_number: int | None, reason: str) -> None:
        """Initialize with the offending line and reason.

        Args:
            line_number: 1-based line number, or None if it cannot be located.
            reason: Description of the problem.
        """
        self.line_number = line_number
        self.reason = reason
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"Malformed sample file, {where}{reason}")
