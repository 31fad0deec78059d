"""Exception types raised by the entrydeterrence package."""

from typing import Optional


class EntryDeterrenceError(Exception):
    """Base class for all package errors."""


class InvalidParametersError(EntryDeterrenceError):
    """Market primitives violate the model assumptions."""

    def __init__(self, validation: "ValidationResult"):  # noqa: F821
        self.validation = validation
        super().__init__(f"invalid model parameters: {validation.message}")


class DomainError(EntryDeterrenceError):
    """An operation was called outside the domain where it is defined."""

    def __init__(self, message: str, reason: Optional[str] = None):
        self.reason = reason
        super().__init__(message)


class ConfigError(EntryDeterrenceError):
    """A configuration file or run configuration could not be used."""


class GridError(EntryDeterrenceError):
    """An oracle grid is degenerate."""
