"""Renderer protocol definition."""

from abc import ABC, abstractmethod
from typing import ClassVar

from archloom.docgen.document import Block, Document, Heading, Paragraph, Preformatted, Table
from archloom.docgen.spec import OutputFormat


class Renderer(ABC):
    """Abstract base class turning a ``Document`` into text of one format.

    ``render`` walks the blocks in order and hands each to the matching
    abstract method; subclasses only decide how a single block looks and
    how the rendered blocks are wrapped into a whole document.
    """

    format: ClassVar[OutputFormat]

    def render(self, document: Document) -> str:
        """Render a full document.

        Args:
            document: The blocks to render.

        Returns:
            The document text, ending with a newline.
        """
        return self.wrap(document, [self._block(block) for block in document.blocks])

    def _block(self, block: Block) -> str:
        match block:
            case Heading():
                return self.heading(block)
            case Paragraph():
                return self.paragraph(block)
            case Preformatted():
                return self.preformatted(block)
            case Table():
                return self.table(block)

    @abstractmethod
    def heading(self, block: Heading) -> str:
        """Render a section heading."""

    @abstractmethod
    def paragraph(self, block: Paragraph) -> str:
        """Render a paragraph of prose."""

    @abstractmethod
    def preformatted(self, block: Preformatted) -> str:
        """Render text verbatim, line breaks preserved."""

    @abstractmethod
    def table(self, block: Table) -> str:
        """Render a table with a header row.

        Cell text is escaped for the target format, and blank lines in a
        cell become separate paragraphs.
        """

    @abstractmethod
    def wrap(self, document: Document, rendered: list[str]) -> str:
        """Join rendered blocks into the final document text."""
