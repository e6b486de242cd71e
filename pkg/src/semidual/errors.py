"""Errors shared by more than one module."""


class ParseError(ValueError):
    """A text input could not be parsed. Carries a 1-based position."""

    def __init__(self, message, line=1, col=1, source="<input>"):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col
        self.source = source


class SizeLimitError(ValueError):
    """An input is larger than an enumeration routine is willing to handle."""
