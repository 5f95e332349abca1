"""Empty containers: dialogs, services and classes with nothing inside."""

from typing_extensions import override

from archloom.model.diagnostics import Diagnostic
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, Layer
from archloom.validation.protocols import Rule, RuleCategory


def _has_child(model: ArchitectureModel, element_id: str, kind: ElementKind) -> bool:
    return any(child.kind is kind for child in model.children(element_id))


class EmptyDialog(Rule):
    """W106: a dialog with no view functions."""

    code = "W106"
    category = RuleCategory.GAP
    layer = Layer.FUNCTIONAL
    summary = "Dialog containing no ViewFunctions"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(dialog, f"dialog '{dialog.id}' contains no view functions")
            for dialog in model.of_kind(ElementKind.DIALOG)
            if not _has_child(model, dialog.id, ElementKind.VIEW_FUNCTION)
        ]


class ServiceWithoutDialogs(Rule):
    """W107: an operational service with no dialogs."""

    code = "W107"
    category = RuleCategory.GAP
    layer = Layer.OPERATIONAL_SERVICE
    summary = "OperationalService containing no Dialogs"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(service, f"operational service '{service.id}' contains no dialogs")
            for service in model.of_kind(ElementKind.OPERATIONAL_SERVICE)
            if not _has_child(model, service.id, ElementKind.DIALOG)
        ]


class EmptyClass(Rule):
    """W109: a class with no methods."""

    code = "W109"
    category = RuleCategory.ORPHAN
    layer = Layer.DATA
    summary = "Class containing no Methods"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(cls, f"class '{cls.id}' contains no methods")
            for cls in model.of_kind(ElementKind.CLASS)
            if not _has_child(model, cls.id, ElementKind.METHOD)
        ]
