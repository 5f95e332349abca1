"""Report request records."""

from enum import StrEnum
from typing import Final

from pydantic import BaseModel, ConfigDict

from archloom.model.metamodel import ElementKind


class ReportKind(StrEnum):
    DIALOG_REPORT = "dialog-report"
    VIEWFN_MODULES = "viewfn-modules"
    MODULE_METHODS = "module-methods"
    TRACE_MATRIX = "trace-matrix"
    FULL_BOOK = "full-book"

    @property
    def subject_kind(self) -> ElementKind | None:
        """Element kind the subject must have; None when the report takes no subject."""
        return _SUBJECT_KINDS.get(self)


_SUBJECT_KINDS: Final[dict[ReportKind, ElementKind]] = {
    ReportKind.DIALOG_REPORT: ElementKind.DIALOG,
    ReportKind.VIEWFN_MODULES: ElementKind.VIEW_FUNCTION,
    ReportKind.MODULE_METHODS: ElementKind.MODULE,
}


class OutputFormat(StrEnum):
    MARKDOWN = "markdown"
    HTML = "html"
    CSV = "csv"


class ReportSpec(BaseModel):
    """What to render.

    Attributes:
        kind: The report kind.
        subject: Id of the dialog, view function or module the report is
            about; absent for trace-matrix and full-book.
        format: Output format. CSV is only available for trace-matrix.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ReportKind
    subject: str | None = None
    format: OutputFormat = OutputFormat.MARKDOWN
