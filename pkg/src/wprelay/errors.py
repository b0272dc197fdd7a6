"""Exception types shared across the package."""


class WPRelayError(Exception):
    """Base class for all package errors."""


class ConfigError(WPRelayError):
    """Malformed or invalid configuration input.

    Carries the offending key and 1-based line number when known.
    """

    def __init__(self, message, key=None, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.key = key
        self.line = line


class DomainError(WPRelayError):
    """A numeric argument is outside the domain of an operation."""


class DegenerateChannelError(DomainError):
    """A channel realization has zero effective gain on some hop."""
