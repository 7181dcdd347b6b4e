"""Exception types shared across the library."""


class InfinigbError(Exception):
    """Base class for all library errors."""


class ParseError(InfinigbError):
    """Malformed monomial or polynomial text; carries the offending offset."""

    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class RingContextMismatch(InfinigbError):
    """Operands belong to different ring contexts."""


class ZeroPolynomialError(InfinigbError):
    """The zero polynomial has no leading data and cannot be a divisor."""


class WindowError(InfinigbError):
    """A generator or operation does not fit the truncation window."""


class OrderKindError(InfinigbError):
    """The operation requires a different kind of monomial order."""


class HomogeneityError(InfinigbError):
    """The operation requires homogeneous input."""


class CertificationError(InfinigbError):
    """A certified Groebner basis or regular sequence is required."""
