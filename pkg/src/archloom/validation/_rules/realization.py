"""Realization gaps and orphans between the functional, component and data layers."""

from typing_extensions import override

from archloom.model.diagnostics import Diagnostic
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, Layer, LinkKind
from archloom.validation.protocols import Rule, RuleCategory


class UnrealizedViewFunction(Rule):
    """W102: a view function no module realizes."""

    code = "W102"
    category = RuleCategory.GAP
    layer = Layer.FUNCTIONAL
    summary = "ViewFunction not Realized by any Module"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(viewfn, f"view function '{viewfn.id}' is not realized by any module")
            for viewfn in model.of_kind(ElementKind.VIEW_FUNCTION)
            if not model.sources_of(viewfn.id, LinkKind.REALIZES)
        ]


class UnrealizedModule(Rule):
    """W103: a module no method realizes."""

    code = "W103"
    category = RuleCategory.GAP
    layer = Layer.COMPONENT
    summary = "Module not Realized by any Method"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(module, f"module '{module.id}' is not realized by any method")
            for module in model.of_kind(ElementKind.MODULE)
            if not model.sources_of(module.id, LinkKind.REALIZES)
        ]


class OrphanModule(Rule):
    """W104: a module that realizes no view function."""

    code = "W104"
    category = RuleCategory.ORPHAN
    layer = Layer.COMPONENT
    summary = "Module that Realizes no ViewFunction"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(module, f"module '{module.id}' realizes no view function")
            for module in model.of_kind(ElementKind.MODULE)
            if not model.targets_of(module.id, LinkKind.REALIZES)
        ]


class OrphanMethod(Rule):
    """W105: a method that realizes no module."""

    code = "W105"
    category = RuleCategory.ORPHAN
    layer = Layer.DATA
    summary = "Method that Realizes no Module"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(method, f"method '{method.id}' realizes no module")
            for method in model.of_kind(ElementKind.METHOD)
            if not model.targets_of(method.id, LinkKind.REALIZES)
        ]
