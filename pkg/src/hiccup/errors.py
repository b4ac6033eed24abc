"""Exception hierarchy shared by all hiccup modules."""


class HiccupError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(HiccupError, ValueError):
    """An argument lies outside the domain the operation is defined on."""


class RangeError(HiccupError, ValueError):
    """An index or bound falls outside the range covered by the data."""


class BFileParseError(HiccupError, ValueError):
    """A b-file is malformed.  Carries the 1-based line number when known."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class IdentityViolation(HiccupError):
    """Concrete data falsified an identity this package asserts.

    Raised when a claimed equality fails on actual numbers, which means
    either the claim or the implementation is wrong; never raised for bad
    caller input.
    """
