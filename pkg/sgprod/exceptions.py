from typing import Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class SgProdError(Exception):
    """Base exception for sgprod errors."""

    exit_code = EXIT_USAGE

    def __init__(self, message: str, exit_code: Optional[int] = None):
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(message)


class ConfigError(SgProdError):
    """Invalid configuration value (usually from the environment)."""


class GraphError(SgProdError):
    """Malformed signed graph or graph-shaped argument."""


class ColoringError(SgProdError):
    """Malformed incidence coloring or a coloring that does not fit its graph."""


class ProductError(SgProdError):
    """Bad product construction input or an undefined projection."""


class PreconditionError(SgProdError):
    """A construction was called outside the hypotheses it is valid for."""


class GuardExceededError(SgProdError):
    """An oracle or enumeration guard was exceeded."""

    exit_code = EXIT_FAILURE


class InvariantViolation(SgProdError):
    """A checked combinatorial invariant failed at runtime."""

    exit_code = EXIT_FAILURE
