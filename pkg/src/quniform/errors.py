"""Exception hierarchy shared by every module."""


class ValidationError(ValueError):
    """Input is well-typed Python but violates a domain precondition."""


class ParseError(ValidationError):
    """A textual literal or file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CarrierMismatch(ValidationError):
    """Two objects that must share a carrier do not."""


class CarrierTooLarge(ValidationError):
    """Exhaustive enumeration refused because the carrier exceeds the guard."""


class FilterBaseError(ValidationError):
    """A family of relations does not behave like a filter base."""
