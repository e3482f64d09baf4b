"""Exception hierarchy for the special-function layer."""


class SpecialFunctionError(Exception):
    """Base exception for all special-function errors.

    All exceptions raised by shannonlab.specfun inherit from this class,
    allowing callers to catch them with a single handler.
    """


class SeriesOverflowError(SpecialFunctionError):
    """Raised when a power series argument would overflow double precision.

    Attributes:
        function: Name of the special function that was evaluated.
        x: The offending argument (largest magnitude seen).
        limit: The accepted magnitude limit.
    """

    def __init__(self, function: str, x: float, limit: float) -> None:
        """Initialize with the function name, argument and limit.

        Args:
            function: Name of the special function.
            x: The argument whose magnitude exceeded the limit.
            limit: The largest accepted argument magnitude.
        """
        self.function = function
        self.x = x
        self.limit = limit
        super().__init__(f"{function}({x!r}) overflows: |x| must not exceed {limit}")
