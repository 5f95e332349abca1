"""archloom: five-layer architecture models as text, checked, traced and documented."""

from archloom.cli import main
from archloom.docgen import OutputFormat, ReportKind, ReportSpec, emit_dsl, render
from archloom.dsl import ParseResult, SourceText, parse, parse_text
from archloom.model import (
    ArchElement,
    ArchitectureModel,
    ArchloomError,
    Diagnostic,
    Direction,
    ElementKind,
    Layer,
    Link,
    LinkKind,
    Severity,
    export_canonical,
    import_canonical,
)
from archloom.trace import coverage, diff, impact, trace
from archloom.validation import ExitStatus, RuleConfig, validate

__all__ = [  # noqa: RUF022
    # Model
    "ArchElement",
    "ArchitectureModel",
    "Diagnostic",
    "Direction",
    "ElementKind",
    "Layer",
    "Link",
    "LinkKind",
    "Severity",
    "export_canonical",
    "import_canonical",
    # Front end
    "ParseResult",
    "SourceText",
    "parse",
    "parse_text",
    # Analyses
    "ExitStatus",
    "RuleConfig",
    "coverage",
    "diff",
    "impact",
    "trace",
    "validate",
    # Documents
    "OutputFormat",
    "ReportKind",
    "ReportSpec",
    "emit_dsl",
    "render",
    # Errors
    "ArchloomError",
    # Entry point
    "main",
]
