"""Exceptions shared across the package."""


class EmptyProblem(ValueError):
    """Raised when an operation receives zero constraints."""


class NonFiniteInput(ValueError):
    """Raised when NaN or infinite values reach a numeric contract."""


class ParseError(ValueError):
    """Malformed constraint text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class MixedArity(ParseError):
    """Constraint file mixes 2-field and 3-field rows."""


class ContractViolation(RuntimeError):
    """Internal invariant broke; maps to process exit code 3 in the CLI."""
