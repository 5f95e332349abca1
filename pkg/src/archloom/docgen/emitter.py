"""Canonical ``.arch`` text for a model."""

from __future__ import annotations

import logging
import textwrap
from typing import Final

from archloom.model.elements import ArchElement
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, LinkKind

logger = logging.getLogger(__name__)

INDENT: Final[str] = "  "

_TOP_LEVEL: Final[frozenset[ElementKind]] = frozenset(
    {
        ElementKind.BUSINESS_PROCESS,
        ElementKind.OPERATIONAL_SERVICE,
        ElementKind.COMPONENT,
        ElementKind.CLASS,
    }
)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _string(text: str, depth: int) -> str:
    """A single-line literal, or a triple-quoted block for text with line breaks."""
    if "\n" not in text:
        return _quote(text)
    if textwrap.dedent(text) != text:
        logger.warning("Text block loses its common indentation when re-parsed: %r", text[:40])
    inner = INDENT * (depth + 1)
    escaped = text.replace("\\", "\\\\").replace('"', '\\"')
    body = "\n".join(inner + line if line else "" for line in escaped.split("\n"))
    return f'"""\n{body}\n{INDENT * depth}"""'


def _refs(elements: list[ArchElement]) -> str:
    return ", ".join(element.id for element in elements)


class _Emitter:
    def __init__(self, model: ArchitectureModel) -> None:
        self._model = model
        self._lines: list[str] = []
        self._blocks: list[str] = []

    def text(self) -> str:
        """Top-level declarations separated by one blank line."""
        return "\n\n".join(self._blocks) + "\n" if self._blocks else ""

    def add(self, element: ArchElement) -> bool:
        """Emit one top-level declaration; False when the grammar cannot express it."""
        self._lines = []
        if not self.declaration(element):
            return False
        self._blocks.append("\n".join(self._lines))
        return True

    def _line(self, depth: int, text: str) -> None:
        self._lines.append(INDENT * depth + text)

    def _desc_block(self, element: ArchElement, depth: int, head: str) -> None:
        if "desc" in element.attrs:
            self._line(depth, head + " {")
            self._line(depth + 1, f"desc {_string(element.desc, depth + 1)}")
            self._line(depth, "}")
        else:
            self._line(depth, head)

    def _children(self, element_id: str, kind: ElementKind) -> list[ArchElement]:
        return [child for child in self._model.children(element_id) if child.kind is kind]

    def declaration(self, element: ArchElement) -> bool:
        match element.kind:
            case ElementKind.BUSINESS_PROCESS:
                self._process(element)
            case ElementKind.OPERATIONAL_SERVICE:
                return self._service(element)
            case ElementKind.COMPONENT:
                self._component(element)
            case ElementKind.CLASS:
                return self._class(element)
            case _:
                return False
        return True

    def _process(self, process: ArchElement) -> None:
        self._line(0, f"process {process.id} {_string(process.name, 0)} {{")
        for function in self._children(process.id, ElementKind.BUSINESS_FUNCTION):
            self._function(function, 1)
        self._line(0, "}")

    def _function(self, function: ArchElement, depth: int) -> None:
        self._line(depth, f"function {function.id} {_string(function.name, depth)} {{")
        for child in self._model.children(function.id):
            if child.kind is ElementKind.BUSINESS_FUNCTION:
                self._function(child, depth + 1)
            else:
                head = f"operation {child.id} {_string(child.name, depth + 1)}"
                self._desc_block(child, depth + 1, head)
        self._line(depth, "}")

    def _service(self, service: ArchElement) -> bool:
        operations = self._model.targets_of(service.id, LinkKind.IMPLEMENTS)
        if not operations:
            return False
        self._line(0, f"service {service.id} {_string(service.name, 0)} implements {_refs(operations)} {{")
        for autofn in self._children(service.id, ElementKind.AUTOMATED_FUNCTION):
            self._line(1, f"autofn {autofn.id} {_string(autofn.name, 1)}")
        for dialog in self._children(service.id, ElementKind.DIALOG):
            self._dialog(dialog)
        self._line(0, "}")
        return True

    def _dialog(self, dialog: ArchElement) -> None:
        if "form" not in dialog.attrs:
            logger.warning("Dialog '%s' has no form; emitting an empty one", dialog.id)
        self._line(1, f"dialog {dialog.id} {_string(dialog.name, 1)} {{")
        self._line(2, f"form {_string(dialog.form, 2)}")
        for viewfn in self._children(dialog.id, ElementKind.VIEW_FUNCTION):
            self._viewfn(viewfn)
        self._line(1, "}")

    def _viewfn(self, viewfn: ArchElement) -> None:
        head = f"viewfn {viewfn.id} {_string(viewfn.name, 2)}"
        covered = self._model.targets_of(viewfn.id, LinkKind.COVERS)
        if covered:
            head += f" covers {_refs(covered)}"
        flows = self._model.links_from(viewfn.id, LinkKind.FLOWS_TO)
        if len(flows) > 1:
            logger.warning("View function '%s' has %d flows; only the first is kept", viewfn.id, len(flows))
        if flows:
            flow = flows[0]
            target = f"external {_quote(flow.target)}" if flow.external else flow.target
            head += f" flows -> {target}"
        self._desc_block(viewfn, 2, head)

    def _component(self, component: ArchElement) -> None:
        tag = component.attrs.get("kind-tag")
        if tag is None:
            logger.warning("Component '%s' has no kind tag; emitting 'subsystem'", component.id)
            tag = "subsystem"
        self._line(0, f"component {component.id} {_string(component.name, 0)} kind {tag} {{")
        for module in self._children(component.id, ElementKind.MODULE):
            self._realizer("module", module, 1)
        self._line(0, "}")

    def _class(self, cls: ArchElement) -> bool:
        owner = self._model.belongs_to(cls.id)
        if owner is None:
            return False
        self._line(0, f"class {cls.id} {_string(cls.name, 0)} in {owner.id} {{")
        for method in self._children(cls.id, ElementKind.METHOD):
            self._realizer("method", method, 1)
        self._line(0, "}")
        return True

    def _realizer(self, keyword: str, element: ArchElement, depth: int) -> None:
        if element.name != element.id:
            logger.warning("%s '%s' display name is not expressible and is dropped", keyword, element.id)
        head = f"{keyword} {element.id}"
        if element.params:
            head += f" params({', '.join(element.params)})"
        realized = self._model.targets_of(element.id, LinkKind.REALIZES)
        if realized:
            head += f" realizes {_refs(realized)}"
        self._desc_block(element, depth, head)


def emit_dsl(model: ArchitectureModel, file: str | None = None) -> str:
    """Re-emit a model as canonical ``.arch`` text.

    Declarations come in model order with two-space indentation and a blank
    line between top-level declarations. Multi-line text is written as
    triple-quoted blocks.

    Args:
        model: The model to emit.
        file: When set, only top-level declarations whose source lies in this
            file are emitted.

    Returns:
        The text, empty for an empty model.
    """
    emitter = _Emitter(model)
    placed: set[str] = set()
    for element in model:
        if element.kind not in _TOP_LEVEL:
            continue
        if file is not None and (element.src is None or element.src.file != file):
            continue
        if emitter.add(element):
            placed.add(element.id)
        else:
            logger.warning(
                "%s '%s' cannot be placed in a declaration; skipped",
                element.kind.value,
                element.id,
            )

    if file is None:
        _warn_unplaced(model, placed)
    return emitter.text()


def _warn_unplaced(model: ArchitectureModel, placed: set[str]) -> None:
    for element in model:
        if element.kind in _TOP_LEVEL:
            continue
        root = element
        while (parent := model.parent(root.id)) is not None and root.kind not in _TOP_LEVEL:
            root = parent
        if root.id not in placed:
            logger.warning("%s '%s' has no declaration to live in; skipped", element.kind.value, element.id)
