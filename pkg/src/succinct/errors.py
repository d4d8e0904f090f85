"""Exception hierarchy shared by the library and the command line."""


class AutomatonError(Exception):
    """Base class for every error raised by this package."""


class InputError(AutomatonError, ValueError):
    """Malformed input: unknown symbols, bad documents, alphabet mismatches."""


class RegexSyntaxError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotAGeneratorError(InputError):
    """A proposed generator does not generate the algebra it is meant for."""


class ResourceLimitError(AutomatonError):
    """A configured state/carrier cap was exceeded."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds the configured cap of {cap}")
        self.cap = cap
