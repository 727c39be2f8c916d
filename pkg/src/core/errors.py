# src/core/errors.py

from __future__ import annotations

from typing import Any, Optional


class TempoError(Exception):
    """Base exception for every error raised by the toolkit."""

    code = "TEMPO_ERROR"

    def __init__(self, message: str, details: Any = None) -> None:
        super().__init__(message)
        self.details = details

    def to_payload(self) -> dict[str, Any]:
        """Structured error body used by the CLI JSON output."""
        return {"code": self.code, "message": str(self), "details": self.details}


class InstanceFormatError(TempoError):
    """Malformed instance or static-graph file."""

    code = "INSTANCE_FORMAT"

    def __init__(self, message: str, line_number: Optional[int] = None, details: Any = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message, details)
        self.line_number = line_number


class PreconditionError(TempoError):
    """An operation was called on an input violating its precondition."""

    code = "PRECONDITION"


class UnvisitableEdgeError(PreconditionError):
    """A star edge has fewer than two times, so no visit of it exists."""

    code = "UNVISITABLE_EDGE"

    def __init__(self, edge: int, times: tuple[int, ...]) -> None:
        super().__init__(
            f"star edge {edge} has {len(times)} time(s); a visit needs two",
            details={"edge": edge, "times": list(times)},
        )
        self.edge = edge


class ResourceGuardError(TempoError):
    """An oracle cap or width guard was exceeded."""

    code = "RESOURCE_GUARD"

    def __init__(self, message: str, limit: int, actual: int) -> None:
        super().__init__(message, details={"limit": limit, "actual": actual})
        self.limit = limit
        self.actual = actual


class ReductionError(TempoError):
    """Invalid input for one of the hardness-reduction generators."""

    code = "REDUCTION"
