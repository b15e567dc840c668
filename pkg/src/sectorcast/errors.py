"""Exception types shared across the toolkit."""


class ParseError(ValueError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DataError(ValueError):
    """Structurally valid input that violates a data contract."""


class GapError(DataError):
    """An interior calendar month has no observations."""


class InsufficientDataError(ValueError):
    """A series is too short for the requested computation."""
