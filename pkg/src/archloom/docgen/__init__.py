"""Operational documents generated from a model, and the canonical DSL emitter."""

from archloom.docgen.document import Document, Heading, Paragraph, Preformatted, Table
from archloom.docgen.emitter import emit_dsl
from archloom.docgen.html import HtmlRenderer
from archloom.docgen.markdown import MarkdownRenderer
from archloom.docgen.matrix import MATRIX_COLUMNS, matrix_csv, matrix_rows
from archloom.docgen.protocols import Renderer
from archloom.docgen.reports import render
from archloom.docgen.spec import OutputFormat, ReportKind, ReportSpec

__all__ = [  # noqa: RUF022
    # Requests
    "OutputFormat",
    "ReportKind",
    "ReportSpec",
    # Documents and renderers
    "Document",
    "Heading",
    "HtmlRenderer",
    "MarkdownRenderer",
    "Paragraph",
    "Preformatted",
    "Renderer",
    "Table",
    # Operations
    "MATRIX_COLUMNS",
    "emit_dsl",
    "matrix_csv",
    "matrix_rows",
    "render",
]
