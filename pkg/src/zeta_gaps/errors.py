"""Exception types raised by the package."""


class ZetaGapsError(Exception):
    """Base class for all package errors."""

    kind = "error"


class DomainError(ZetaGapsError, ValueError):
    """An argument lies outside the domain where an operation is defined."""

    kind = "domain"


class ValidationError(ZetaGapsError, ValueError):
    """Input data is structurally invalid (too few zeros, bad ordering, ...)."""

    kind = "validation"


class ZeroFileFormatError(ValidationError):
    """A zero-ordinate file could not be parsed."""

    kind = "format"

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        loc = ""
        if path is not None:
            loc = f"{path}"
            if line is not None:
                loc += f":{line}"
            loc += ": "
        super().__init__(loc + message)
