"""Markdown renderer: ``#`` headings, fenced form text, pipe tables."""

import re

from typing_extensions import override

from archloom.docgen.document import Document, Heading, Paragraph, Preformatted, Table, paragraphs
from archloom.docgen.protocols import Renderer
from archloom.docgen.spec import OutputFormat


def _cell(text: str) -> str:
    return "<br><br>".join(part.replace("|", "\\|") for part in paragraphs(text))


def _row(cells: tuple[str, ...]) -> str:
    return "| " + " | ".join(cells) + " |"


class MarkdownRenderer(Renderer):
    """Render documents as Markdown with pipe tables."""

    format = OutputFormat.MARKDOWN

    @override
    def heading(self, block: Heading) -> str:
        return f"{'#' * block.level} {' '.join(block.text.split())}"

    @override
    def paragraph(self, block: Paragraph) -> str:
        return "\n\n".join(paragraphs(block.text))

    @override
    def preformatted(self, block: Preformatted) -> str:
        longest = max((len(run) for run in re.findall(r"`+", block.text)), default=0)
        fence = "`" * max(3, longest + 1)
        return f"{fence}text\n{block.text}\n{fence}"

    @override
    def table(self, block: Table) -> str:
        lines = [
            _row(tuple(_cell(column) for column in block.columns)),
            _row(tuple("---" for _ in block.columns)),
        ]
        lines.extend(_row(tuple(_cell(cell) for cell in row)) for row in block.rows)
        return "\n".join(lines)

    @override
    def wrap(self, document: Document, rendered: list[str]) -> str:
        parts = [f"# {document.title}"] if document.title else []
        parts.extend(part for part in rendered if part)
        return "\n\n".join(parts) + "\n" if parts else ""
