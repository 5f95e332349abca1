"""Report builders and the ``render`` entry point."""

from collections.abc import Callable, Mapping
import logging
from types import MappingProxyType
from typing import Final

from archloom.docgen.document import Block, Document, Heading, Paragraph, Preformatted, Table
from archloom.docgen.html import HtmlRenderer
from archloom.docgen.markdown import MarkdownRenderer
from archloom.docgen.matrix import MATRIX_COLUMNS, matrix_csv, matrix_rows
from archloom.docgen.protocols import Renderer
from archloom.docgen.spec import OutputFormat, ReportKind, ReportSpec
from archloom.model.elements import ArchElement
from archloom.model.exceptions import SubjectKindError, UnsupportedFormatError
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, LinkKind

logger = logging.getLogger(__name__)

RENDERERS: Final[Mapping[OutputFormat, Renderer]] = MappingProxyType(
    {
        OutputFormat.MARKDOWN: MarkdownRenderer(),
        OutputFormat.HTML: HtmlRenderer(),
    }
)


def _titled(element: ArchElement) -> str:
    """``VF05. Choose vehicle registration type``"""
    return f"{element.id}. {element.name}"


def dialog_blocks(model: ArchitectureModel, dialog: ArchElement) -> list[Block]:
    """Dialog heading, form text and its view functions in declaration order."""
    rows = tuple(
        (_titled(viewfn), viewfn.desc)
        for viewfn in model.children(dialog.id)
        if viewfn.kind is ElementKind.VIEW_FUNCTION
    )
    return [
        Heading(f"Dialog {_titled(dialog)}"),
        Preformatted(dialog.form),
        Table(("View function", "Function definition"), rows),
    ]


def viewfn_module_blocks(model: ArchitectureModel, viewfn: ArchElement) -> list[Block]:
    """Modules realizing a view function, with their owning component."""
    rows: list[tuple[str, ...]] = []
    for module in model.sources_of(viewfn.id, LinkKind.REALIZES):
        component = model.belongs_to(module.id)
        rows.append(
            (
                module.id,
                ", ".join(module.params),
                component.name if component is not None else "",
                module.desc,
            )
        )
    return [
        Heading(f"Modules of the view function {_titled(viewfn)}"),
        Table(("Module", "Parameters", "Component", "Comments"), tuple(rows)),
    ]


def module_method_blocks(model: ArchitectureModel, module: ArchElement) -> list[Block]:
    """Methods realizing a module, with their class."""
    rows: list[tuple[str, ...]] = []
    for method in model.sources_of(module.id, LinkKind.REALIZES):
        cls = model.parent(method.id)
        rows.append(
            (
                method.id,
                ", ".join(method.params),
                cls.name if cls is not None else "",
                method.desc,
            )
        )
    return [
        Heading(f"Methods that implement the {module.id} module"),
        Table(("Method", "Parameters", "Class", "Comments"), tuple(rows)),
    ]


def matrix_blocks(model: ArchitectureModel) -> list[Block]:
    return [Heading("Traceability matrix"), Table(MATRIX_COLUMNS, tuple(matrix_rows(model)))]


def book_blocks(model: ArchitectureModel) -> list[Block]:
    """Every dialog report, then every view function and module table, each by id."""
    blocks: list[Block] = []
    if model.meta.version:
        blocks.append(Paragraph(f"Version {model.meta.version}"))

    def by_id(kind: ElementKind) -> list[ArchElement]:
        return sorted(model.of_kind(kind), key=lambda element: element.id)

    for dialog in by_id(ElementKind.DIALOG):
        blocks.extend(dialog_blocks(model, dialog))
    for viewfn in by_id(ElementKind.VIEW_FUNCTION):
        blocks.extend(viewfn_module_blocks(model, viewfn))
    for module in by_id(ElementKind.MODULE):
        blocks.extend(module_method_blocks(model, module))
    return blocks


SUBJECT_REPORTS: Final[Mapping[ReportKind, Callable[[ArchitectureModel, ArchElement], list[Block]]]] = (
    MappingProxyType(
        {
            ReportKind.DIALOG_REPORT: dialog_blocks,
            ReportKind.VIEWFN_MODULES: viewfn_module_blocks,
            ReportKind.MODULE_METHODS: module_method_blocks,
        }
    )
)


def _subject(model: ArchitectureModel, spec: ReportSpec) -> ArchElement | None:
    required = spec.kind.subject_kind
    if required is None:
        if spec.subject is not None:
            msg = f"report '{spec.kind.value}' takes no subject, got '{spec.subject}'"
            raise SubjectKindError(msg)
        return None
    if spec.subject is None:
        msg = f"report '{spec.kind.value}' needs a {required.value} subject"
        raise SubjectKindError(msg)
    subject = model.element(spec.subject)
    if subject.kind is not required:
        msg = (
            f"report '{spec.kind.value}' needs a {required.value} subject, "
            f"'{subject.id}' is a {subject.kind.value}"
        )
        raise SubjectKindError(msg)
    return subject


def render(model: ArchitectureModel, spec: ReportSpec) -> str:
    """Render one report.

    Args:
        model: The model to document.
        spec: Report kind, subject and format.

    Returns:
        The document text.

    Raises:
        UnsupportedFormatError: CSV requested for anything but trace-matrix (E106).
        UnknownElementError: The subject does not resolve (E101).
        SubjectKindError: The subject is missing, superfluous or of the wrong kind (E105).
    """
    if spec.format is OutputFormat.CSV and spec.kind is not ReportKind.TRACE_MATRIX:
        raise UnsupportedFormatError(spec.kind.value, spec.format.value)
    subject = _subject(model, spec)
    logger.debug("Rendering %s (%s) as %s", spec.kind.value, spec.subject, spec.format.value)

    if spec.format is OutputFormat.CSV:
        return matrix_csv(matrix_rows(model))

    title: str | None = None
    if subject is not None:
        blocks = SUBJECT_REPORTS[spec.kind](model, subject)
    elif spec.kind is ReportKind.TRACE_MATRIX:
        blocks = matrix_blocks(model)
    else:
        title = model.meta.name or "Architecture"
        blocks = book_blocks(model)
    return RENDERERS[spec.format].render(Document(blocks=tuple(blocks), title=title))
