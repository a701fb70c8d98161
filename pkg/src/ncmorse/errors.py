"""Exception types shared across the package."""


class NCMorseError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(NCMorseError):
    """Malformed or inconsistent input: unknown ids, bad documents, mismatched shapes."""


class InvalidComplexError(InvalidInputError):
    """An operation requiring a valid cell complex received an invalid one."""


class InvalidMorseError(InvalidInputError):
    """A Morse-function precondition failed (validity, matchability, acceptability)."""


class UnsupportedComplexError(NCMorseError):
    """The input is valid but outside what the operation supports
    (non-regular complex where signs matter, dimension gaps)."""
