"""Rules around operational services: implementation, coverage and membership."""

from typing_extensions import override

from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import ArchElement
from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, Layer, LinkKind
from archloom.validation.protocols import Rule, RuleCategory


def service_of(model: ArchitectureModel, element_id: str) -> ArchElement | None:
    """The OperationalService an AutomatedFunction, Dialog or ViewFunction sits in."""
    current = model.parent(element_id)
    while current is not None and current.kind is not ElementKind.OPERATIONAL_SERVICE:
        if current.kind is not ElementKind.DIALOG:
            return None
        current = model.parent(current.id)
    return current


def _service_id(model: ArchitectureModel, element_id: str) -> str | None:
    service = service_of(model, element_id)
    return service.id if service is not None else None


class UncoveredAutomatedFunction(Rule):
    """W101: an automated function no view function of its own service covers."""

    code = "W101"
    category = RuleCategory.GAP
    layer = Layer.OPERATIONAL_SERVICE
    summary = "AutomatedFunction not Covered by any ViewFunction of its own service"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        found: list[Diagnostic] = []
        for autofn in model.of_kind(ElementKind.AUTOMATED_FUNCTION):
            own = _service_id(model, autofn.id)
            covering = model.sources_of(autofn.id, LinkKind.COVERS)
            if not any(_service_id(model, viewfn.id) == own for viewfn in covering):
                found.append(
                    self.hit(
                        autofn,
                        f"automated function '{autofn.id}' is not covered by any view function "
                        "of its own service",
                    )
                )
        return found


class ServiceWithoutOperation(Rule):
    """W108: an operational service that implements no business operation."""

    code = "W108"
    category = RuleCategory.ORPHAN
    layer = Layer.OPERATIONAL_SERVICE
    summary = "OperationalService that Implements no BusinessOperation"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(service, f"operational service '{service.id}' implements no business operation")
            for service in model.of_kind(ElementKind.OPERATIONAL_SERVICE)
            if not model.targets_of(service.id, LinkKind.IMPLEMENTS)
        ]


class ManualOperation(Rule):
    """I201: a business operation no service implements."""

    code = "I201"
    category = RuleCategory.INFO
    layer = Layer.BUSINESS
    summary = "BusinessOperation with no OperationalService"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        return [
            self.hit(operation, f"business operation '{operation.id}' has no operational service")
            for operation in model.of_kind(ElementKind.BUSINESS_OPERATION)
            if not model.sources_of(operation.id, LinkKind.IMPLEMENTS)
        ]


class ImplicitCoverage(Rule):
    """I202: a view function without covers links in a service that declares automated functions."""

    code = "I202"
    category = RuleCategory.INFO
    layer = Layer.FUNCTIONAL
    summary = "ViewFunction with no covers links while its service declares AutomatedFunctions"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        found: list[Diagnostic] = []
        for viewfn in model.of_kind(ElementKind.VIEW_FUNCTION):
            if model.targets_of(viewfn.id, LinkKind.COVERS):
                continue
            service = service_of(model, viewfn.id)
            if service is None:
                continue
            if any(c.kind is ElementKind.AUTOMATED_FUNCTION for c in model.children(service.id)):
                found.append(
                    self.hit(
                        viewfn,
                        f"view function '{viewfn.id}' covers no automated function "
                        f"of service '{service.id}'",
                    )
                )
        return found


class CrossServiceCoverage(Rule):
    """E110: a covers link reaching into another service."""

    code = "E110"
    category = RuleCategory.ERROR
    layer = Layer.FUNCTIONAL
    summary = "Covers target AutomatedFunction belongs to a different service"

    @override
    def check(self, model: ArchitectureModel) -> list[Diagnostic]:
        found: list[Diagnostic] = []
        for viewfn in model.of_kind(ElementKind.VIEW_FUNCTION):
            own = _service_id(model, viewfn.id)
            for autofn in model.targets_of(viewfn.id, LinkKind.COVERS):
                other = _service_id(model, autofn.id)
                if other != own:
                    found.append(
                        self.hit(
                            viewfn,
                            f"view function '{viewfn.id}' of service '{own}' covers "
                            f"automated function '{autofn.id}' of service '{other}'",
                        )
                    )
        return found
