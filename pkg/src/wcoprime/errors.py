"""Exception hierarchy shared by the library and the CLI."""


class WcoprimeError(Exception):
    """Base class for all library errors."""


class BudgetExceeded(WcoprimeError):
    """An enumeration would exceed the configured work budget."""


class InvalidCurveError(WcoprimeError, ValueError):
    """Weil polynomial data that cannot come from a genuine curve."""


class IncompatibleSError(WcoprimeError, ValueError):
    """A set S asking for more places of some degree than the curve has."""


class TruncationError(WcoprimeError, IndexError):
    """Read of a truncated series coefficient beyond its truncation order."""


class ConfigError(WcoprimeError):
    """Configuration text failed schema validation.

    ``errors`` is a list of ``(line, message)`` pairs; ``line`` is 1-based or
    ``None`` when the problem has no source location.
    """

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(
            f"line {ln}: {msg}" if ln else msg for ln, msg in self.errors))
