"""Exception types raised by the library and the CLI."""


class DomgeoError(Exception):
    """Base class for all errors raised by domgeo."""


class UsageError(DomgeoError, ValueError):
    """A caller violated a documented precondition (bad dimensions, duplicate ids, ...)."""


class ParseError(DomgeoError, ValueError):
    """A dataset file is malformed.

    ``line`` is the 1-based line number the problem was detected at.
    """

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
