"""Archloom exceptions. Every exception carries the diagnostic code it reports as."""

from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import SourceSpan


class ArchloomError(Exception):
    """Base exception for all archloom errors."""

    code = "E100"

    def to_diagnostic(self, span: SourceSpan | None = None) -> Diagnostic:
        return Diagnostic.of(self.code, str(self), span=span)


class UnknownElementError(ArchloomError):
    """Raised when an element id does not resolve in the model."""

    code = "E101"

    def __init__(self, element_id: str) -> None:
        self.element_id = element_id
        super().__init__(f"unknown element '{element_id}'")

    def to_diagnostic(self, span: SourceSpan | None = None) -> Diagnostic:
        return Diagnostic.of(self.code, str(self), element=self.element_id, span=span)


class CanonicalFormatError(ArchloomError):
    """Raised when a canonical interchange stream is malformed."""

    code = "E102"

    def __init__(self, position: str, detail: str) -> None:
        self.position = position
        self.detail = detail
        super().__init__(f"malformed canonical stream at {position}: {detail}")


class UnknownKindError(ArchloomError):
    """Raised when a canonical stream names an element or link kind that does not exist."""

    code = "E103"

    def __init__(self, kind_name: str, position: str) -> None:
        self.kind_name = kind_name
        self.position = position
        super().__init__(f"unknown kind '{kind_name}' at {position}")


class RuleConfigError(ArchloomError):
    """Raised when a rule configuration names an unknown code or contradicts itself."""

    code = "E104"

    def __init__(self, message: str, location: str | None = None) -> None:
        self.location = location
        prefix = f"{location}: " if location else ""
        super().__init__(f"{prefix}{message}")


class SubjectKindError(ArchloomError):
    """Raised when a report subject is missing, superfluous or of the wrong kind."""

    code = "E105"


class UnsupportedFormatError(ArchloomError):
    """Raised when a report is requested in a format its kind does not support."""

    code = "E106"

    def __init__(self, report_kind: str, output_format: str) -> None:
        self.report_kind = report_kind
        self.output_format = output_format
        super().__init__(f"format '{output_format}' is not available for '{report_kind}' reports")


class ModelBuildError(ArchloomError):
    """Raised when records decoded from a stream do not form a valid model."""

    code = "E100"

    def __init__(self, diagnostics: list[Diagnostic]) -> None:
        self.diagnostics = diagnostics
        codes = ", ".join(sorted({d.code for d in diagnostics}))
        super().__init__(f"model is invalid ({len(diagnostics)} problem(s): {codes})")
