"""Multi-file front end: decode, tokenize, parse, then resolve through ``build_model``."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
import logging
from pathlib import Path

from archloom.dsl.lexer import tokenize
from archloom.dsl.parser import Parser
from archloom.model.diagnostics import Diagnostic, has_errors
from archloom.model.elements import ArchElement, Link, ModelMeta, SourceSpan
from archloom.model.exceptions import UnknownElementError
from archloom.model.graph import ArchitectureModel, build_model

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SourceText:
    """An in-memory source file.

    Attributes:
        name: File name used in spans and diagnostics.
        content: Source text, or raw bytes to be decoded as UTF-8.
    """

    name: str
    content: str | bytes


@dataclass(frozen=True, slots=True)
class ParseResult:
    """Outcome of ``parse``. ``model`` is set iff no diagnostic is an error."""

    model: ArchitectureModel | None
    diagnostics: tuple[Diagnostic, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.model is not None


Source = SourceText | Path | str


def _load(source: Source) -> SourceText:
    if isinstance(source, SourceText):
        return source
    path = Path(source)
    return SourceText(name=str(source), content=path.read_bytes())


def _decode(source: SourceText) -> tuple[str, list[Diagnostic]]:
    """Decode raw bytes; invalid UTF-8 yields P001 at the first bad byte and no text."""
    if isinstance(source.content, str):
        text = source.content
    else:
        try:
            text = source.content.decode("utf-8")
        except UnicodeDecodeError as error:
            prefix = source.content[: error.start].decode("utf-8")
            line = prefix.count("\n") + 1
            column = len(prefix) - (prefix.rfind("\n") + 1) + 1
            span = SourceSpan(file=source.name, line=line, column=column, length=1)
            message = f"invalid UTF-8 byte 0x{source.content[error.start]:02x}"
            return "", [Diagnostic.of("P001", message, span=span)]
    return text.removeprefix("\ufeff"), []


def parse(sources: Iterable[Source], meta: ModelMeta | None = None) -> ParseResult:
    """Parse one or more ``.arch`` sources into a resolved model.

    Declarations from every source are collected first and resolved
    together, so references may point forward and across files.

    Args:
        sources: File paths or ``SourceText`` objects, in order.
        meta: Optional model name and version.

    Returns:
        A ``ParseResult`` with parse (P0xx) diagnostics followed by build
        (E0xx) diagnostics. Build diagnostics are collected even when the
        parse failed.

    Raises:
        OSError: If a path cannot be read.
    """
    elements: list[ArchElement] = []
    links: list[Link] = []
    diagnostics: list[Diagnostic] = []

    for source in sources:
        loaded = _load(source)
        text, decode_errors = _decode(loaded)
        diagnostics.extend(decode_errors)
        tokens, lexical = tokenize(text, loaded.name)
        diagnostics.extend(lexical)
        parser = Parser(tokens)
        parser.parse_file()
        diagnostics.extend(parser.diagnostics)
        elements.extend(parser.elements)
        links.extend(parser.links)
        logger.debug(
            "Parsed %s: %d element(s), %d link(s), %d diagnostic(s)",
            loaded.name,
            len(parser.elements),
            len(parser.links),
            len(decode_errors) + len(lexical) + len(parser.diagnostics),
        )

    built = build_model(elements, links, meta)
    if isinstance(built, list):
        diagnostics.extend(built)
        return ParseResult(model=None, diagnostics=tuple(diagnostics))
    if has_errors(diagnostics):
        return ParseResult(model=None, diagnostics=tuple(diagnostics))
    return ParseResult(model=built, diagnostics=tuple(diagnostics))


def parse_text(text: str, name: str = "<memory>") -> ParseResult:
    """Parse a single in-memory text."""
    return parse([SourceText(name=name, content=text)])


def locate(result: ParseResult, element_id: str) -> SourceSpan:
    """Return the span of the keyword that declares ``element_id``.

    Raises:
        UnknownElementError: If the result holds no model, or the id is unknown
            or was not declared in source text.
    """
    if result.model is None:
        raise UnknownElementError(element_id)
    span = result.model.element(element_id).src
    if span is None:
        raise UnknownElementError(element_id)
    return span
