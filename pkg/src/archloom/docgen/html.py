"""HTML renderer: one self-contained page with inline styling."""

from html import escape
from typing import Final

from typing_extensions import override

from archloom.docgen.document import Document, Heading, Paragraph, Preformatted, Table, paragraphs
from archloom.docgen.protocols import Renderer
from archloom.docgen.spec import OutputFormat

_STYLE: Final[str] = (
    "body { font-family: sans-serif; margin: 2em; }\n"
    "table { border-collapse: collapse; margin-bottom: 1.5em; }\n"
    "th, td { border: 1px solid #999; padding: 0.3em 0.6em; text-align: left; vertical-align: top; }\n"
    "th { background: #eee; }\n"
    "td p { margin: 0 0 0.5em 0; }\n"
    "pre { background: #f6f6f6; padding: 0.8em; white-space: pre-wrap; }"
)


def _cell(tag: str, text: str) -> str:
    body = "".join(f"<p>{escape(part)}</p>" for part in paragraphs(text))
    return f"<{tag}>{body}</{tag}>"


class HtmlRenderer(Renderer):
    """Render documents as a standalone HTML page."""

    format = OutputFormat.HTML

    @override
    def heading(self, block: Heading) -> str:
        level = min(max(block.level, 1), 6)
        return f"<h{level}>{escape(block.text)}</h{level}>"

    @override
    def paragraph(self, block: Paragraph) -> str:
        return "\n".join(f"<p>{escape(part)}</p>" for part in paragraphs(block.text))

    @override
    def preformatted(self, block: Preformatted) -> str:
        return f"<pre>{escape(block.text)}</pre>"

    @override
    def table(self, block: Table) -> str:
        header = "".join(f"<th>{escape(column)}</th>" for column in block.columns)
        lines = ["<table>", f"<thead><tr>{header}</tr></thead>", "<tbody>"]
        lines.extend("<tr>" + "".join(_cell("td", cell) for cell in row) + "</tr>" for row in block.rows)
        lines.extend(["</tbody>", "</table>"])
        return "\n".join(lines)

    @override
    def wrap(self, document: Document, rendered: list[str]) -> str:
        title = document.title or next(
            (block.text for block in document.blocks if isinstance(block, Heading)), "Architecture"
        )
        head = [
            "<!DOCTYPE html>",
            '<html lang="en">',
            "<head>",
            '<meta charset="utf-8"/>',
            f"<title>{escape(title)}</title>",
            f"<style>\n{_STYLE}\n</style>",
            "</head>",
            "<body>",
        ]
        if document.title:
            head.append(f"<h1>{escape(document.title)}</h1>")
        return "\n".join([*head, *rendered, "</body>", "</html>"]) + "\n"
