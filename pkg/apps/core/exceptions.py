"""
Shared exception base for causal-extract.

Every domain error carries the process exit code the CLI reports for it:
2 for input/configuration problems, 3 for numerical non-convergence.
"""
from typing import Optional


class CausalExtractError(Exception):
    """Base class of all domain errors."""

    exit_code: int = 2

    def __init__(self, message: str, details: Optional[dict] = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)

    def __reduce__(self):
        # subclasses take other constructor arguments; rebuild from state
        return (_restore_error, (type(self), self.message, self.__dict__))


def _restore_error(cls, message: str, state: dict) -> CausalExtractError:
    error = cls.__new__(cls)
    Exception.__init__(error, message)
    error.__dict__.update(state)
    return error


class ConfigError(CausalExtractError):
    """Invalid run configuration or config file."""


class ModelFormatError(CausalExtractError):
    """Malformed or incompatible serialized model file."""

    def __init__(self, message: str, line_number: Optional[int] = None, source: str = "model"):
        location = f"{source}:{line_number}" if line_number else source
        super().__init__(f"{location}: {message}", {"line_number": line_number})
        self.line_number = line_number
