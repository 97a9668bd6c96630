"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class OverlapDenseError(Exception):
    """Base class for all errors raised by this package."""


class ContractError(OverlapDenseError, ValueError):
    """An operation was called outside its documented preconditions."""


class ParseError(ContractError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleError(ContractError):
    """No non-empty subgraph satisfies the requested constraints."""


class ValidationError(ContractError):
    """A supplied certificate (e.g. a clique partition) is invalid."""


class BudgetExceeded(OverlapDenseError):
    """The brute-force oracle refused an instance larger than its budget."""


class CertificationRefused(OverlapDenseError):
    """A hardness-reduction solution scored below the certification threshold."""
