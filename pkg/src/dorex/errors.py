"""Exception types shared across the package."""


class DorexError(Exception):
    """Base class for all package errors."""


class DescriptorMismatchError(DorexError):
    """Operands live over different base rings."""


class InconsistentMapsError(DorexError):
    """A structure-map operation was invoked before its consistency check passed."""


class InconsistentPresentationError(DorexError):
    """Normal-form arithmetic refused on a presentation that fails consistency."""


class RefusalError(DorexError):
    """A conversion or theorem check refused because a hypothesis is unmet."""


class ConstraintError(DorexError):
    """Catalogue parameter bindings violate a constraint."""


class ResourceCapError(DorexError):
    """The brute-force oracle would exceed its word-count cap."""

    def __init__(self, message, count=None, cap=None):
        super().__init__(message)
        self.count = count
        self.cap = cap


class ParseError(DorexError):
    """Syntax or binding error in presentation or element text."""

    def __init__(self, message, line=None, col=None):
        if line is not None:
            loc = f"line {line}" if col is None else f"line {line}, col {col}"
            message = f"{loc}: {message}"
        super().__init__(message)
        self.line = line
        self.col = col
