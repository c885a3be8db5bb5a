"""Exception hierarchy shared across the package.

Every error raised by the library derives from CecpError so callers can
catch one base class. The CLI maps subclasses onto process exit codes and
the HTTP service maps them onto response payloads.
"""


class CecpError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(CecpError):
    """An argument is outside its documented domain (non-finite value,
    bad parameter range, mismatched vector lengths, ...)."""


class DimensionMismatchError(InvalidInputError):
    """A window or pattern has the wrong length for the requested dimension."""


class UnsupportedDimensionError(InvalidInputError):
    """Embedding dimension outside the supported 2..10 range."""


class InsufficientDataError(CecpError):
    """A series is too short for the requested extraction or window."""


class InvalidDistributionError(InvalidInputError):
    """A probability vector has negative entries or does not sum to one."""


class InvalidAlphabetError(InvalidInputError):
    """Alphabet size below two states."""


class PanelFormatError(CecpError):
    """A delimited input file could not be parsed.

    ``line_number`` is 1-based and refers to the physical line in the file,
    or None when the problem is not tied to a single line.
    """

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DuplicateDateError(PanelFormatError):
    """The same date appears twice for one series."""
