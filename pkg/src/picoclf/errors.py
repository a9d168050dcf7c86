"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 1, data-level errors
(ParseError, ValidationError, ContractViolation) -> 2. Non-convergence is
not an exception; it is a status flag on the trained model (exit 3).
"""


class PicoError(Exception):
    """Base class for all package errors."""


class ConfigError(PicoError):
    """Unusable run configuration (bad flags, unresolvable paths)."""


class ParseError(PicoError):
    """Malformed input file (wrong field count, bad header)."""


class ValidationError(PicoError):
    """Input violates a documented precondition or value constraint."""


class ContractViolation(PicoError):
    """Caller broke an API contract (dimension or range mismatch)."""
