"""Exception hierarchy for the reconstruction operators."""


class ReconstructionError(Exception):
    """Base exception for all reconstruction errors.

    All exceptions raised by shannonlab.reconstruct inherit from this class,
    allowing callers to catch them with a single handler.
    """


class CoverageError(ReconstructionError):
    """Raised when the samples do not reach every index a sum needs.

    Attributes:
        k_min: First index held by the sample set.
        k_max: Last index held by the sample set.
        required_min: First index the evaluation needs.
        required_max: Last index the evaluation needs.
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
            f"Reconstruction needs samples [{required_min}, {required_max}] "
            f"but only [{k_min}, {k_max}] are available"
        )
