"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside an operation's domain (sign, parity, or range)."""


class ConfigurationError(ValueError):
    """Invalid parameter set or run configuration."""


class InnerSplitUndefined(DomainError):
    """The nested odd/shift split does not exist (m is one less than a power of two)."""


class BFileParseError(ValueError):
    """A b-file line could not be parsed; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
