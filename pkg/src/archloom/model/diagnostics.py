"""Coded findings shared by the parser, the model builder and the validator."""

from enum import StrEnum
import re
from typing import Final

from pydantic import BaseModel, ConfigDict, field_validator

from archloom.model.elements import SourceSpan

CODE_PATTERN: Final[re.Pattern[str]] = re.compile(r"^[PEWI]\d{3}$")


class Severity(StrEnum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"

    @property
    def rank(self) -> int:
        """Sort rank: errors first."""
        return _SEVERITY_RANKS[self]


_SEVERITY_RANKS: Final[dict[Severity, int]] = {
    Severity.ERROR: 0,
    Severity.WARNING: 1,
    Severity.INFO: 2,
}


def default_severity(code: str) -> Severity:
    """Severity class implied by a code prefix (P and E are errors)."""
    if code.startswith("W"):
        return Severity.WARNING
    if code.startswith("I"):
        return Severity.INFO
    return Severity.ERROR


class Diagnostic(BaseModel):
    """A coded finding anchored on an element and/or a source span."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    severity: Severity
    code: str
    message: str
    element: str | None = None
    span: SourceSpan | None = None

    @field_validator("code")
    @classmethod
    def _check_code(cls, value: str) -> str:
        if not CODE_PATTERN.match(value):
            msg = f"diagnostic code must look like E001, got {value!r}"
            raise ValueError(msg)
        return value

    @classmethod
    def of(
        cls,
        code: str,
        message: str,
        *,
        element: str | None = None,
        span: SourceSpan | None = None,
    ) -> "Diagnostic":
        """Create a diagnostic with the default severity of its code."""
        return cls(
            severity=default_severity(code),
            code=code,
            message=message,
            element=element,
            span=span,
        )

    def with_severity(self, severity: Severity) -> "Diagnostic":
        return self.model_copy(update={"severity": severity})

    def sort_key(self) -> tuple[int, str, str, str]:
        """Severity, code, element id; the message breaks remaining ties."""
        return (self.severity.rank, self.code, self.element or "", self.message)

    def render(self) -> str:
        """One-line form: ``SEVERITY CODE file:line:col message``."""
        location = str(self.span) if self.span is not None else "-"
        return f"{self.severity.value.upper()} {self.code} {location} {self.message}"

    def __str__(self) -> str:
        return self.render()


def has_errors(diagnostics: list[Diagnostic] | tuple[Diagnostic, ...]) -> bool:
    return any(d.severity is Severity.ERROR for d in diagnostics)
