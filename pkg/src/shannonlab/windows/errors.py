"""Exception hierarchy for window construction and evaluation."""


class WindowError(Exception):
    """Base exception for all window errors.

    All exceptions raised by shannonlab.windows inherit from this class.
    Malformed window types are rejected earlier by pydantic validation.
    """


class WindowParameterError(WindowError):
    """Raised when an evaluator receives an argument outside its domain.

    Attributes:
        parameter: Name of the offending argument.
        value: The value that was rejected.
        reason: Human-readable description of the violated condition.
    """

    def __init__(self, parameter: str, value: float, reason: str) -> None:
        """Initialize with the parameter name, value and reason.

        Args:
            parameter: Name of the offending argument.
            value: The rejected value.
            reason: Description of the violated condition.
        """
        self.parameter = parameter
        self.value = value
        self.reason = reason
        super().__init__(f"Invalid {parameter}={value!r}: {reason}")
