class ParseError(ValueError):
    """Malformed input text. ``pos`` is the 0-based character offset, if known."""

    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)


class ContextMismatch(ValueError):
    pass


class NotAutomorphismError(ValueError):
    """Raised when an image tuple cannot be an automorphism (det of abelianization != +-1)."""
