"""Five-layer metamodel: layers, element kinds, link kinds and the legal-link table."""

from enum import IntEnum, StrEnum
from typing import Final


class Layer(IntEnum):
    """Architectural representation, ordered from abstraction (1) to detail (5)."""

    BUSINESS = 1
    OPERATIONAL_SERVICE = 2
    FUNCTIONAL = 3
    COMPONENT = 4
    DATA = 5

    @property
    def label(self) -> str:
        """Display name of the layer (``Business``, ``OperationalService``, ...)."""
        return _LAYER_LABELS[self]


_LAYER_LABELS: Final[dict[Layer, str]] = {
    Layer.BUSINESS: "Business",
    Layer.OPERATIONAL_SERVICE: "OperationalService",
    Layer.FUNCTIONAL: "Functional",
    Layer.COMPONENT: "Component",
    Layer.DATA: "Data",
}


class ElementKind(StrEnum):
    """Kind of an architecture element. Each kind lives in exactly one layer."""

    BUSINESS_PROCESS = "BusinessProcess"
    BUSINESS_FUNCTION = "BusinessFunction"
    BUSINESS_OPERATION = "BusinessOperation"
    OPERATIONAL_SERVICE = "OperationalService"
    AUTOMATED_FUNCTION = "AutomatedFunction"
    DIALOG = "Dialog"
    VIEW_FUNCTION = "ViewFunction"
    COMPONENT = "Component"
    MODULE = "Module"
    CLASS = "Class"
    METHOD = "Method"

    @property
    def layer(self) -> Layer:
        """The layer this kind belongs to."""
        return _KIND_LAYERS[self]


_KIND_LAYERS: Final[dict[ElementKind, Layer]] = {
    ElementKind.BUSINESS_PROCESS: Layer.BUSINESS,
    ElementKind.BUSINESS_FUNCTION: Layer.BUSINESS,
    ElementKind.BUSINESS_OPERATION: Layer.BUSINESS,
    ElementKind.OPERATIONAL_SERVICE: Layer.OPERATIONAL_SERVICE,
    ElementKind.AUTOMATED_FUNCTION: Layer.OPERATIONAL_SERVICE,
    ElementKind.DIALOG: Layer.FUNCTIONAL,
    ElementKind.VIEW_FUNCTION: Layer.FUNCTIONAL,
    ElementKind.COMPONENT: Layer.COMPONENT,
    ElementKind.MODULE: Layer.COMPONENT,
    ElementKind.CLASS: Layer.DATA,
    ElementKind.METHOD: Layer.DATA,
}


class LinkKind(StrEnum):
    """Kind of a derivation link between two elements."""

    CONTAINS = "Contains"
    IMPLEMENTS = "Implements"
    COVERS = "Covers"
    REALIZES = "Realizes"
    FLOWS_TO = "FlowsTo"
    BELONGS_TO = "BelongsTo"

    @property
    def stored(self) -> bool:
        """False for BelongsTo, which is a derived view of Contains."""
        return self is not LinkKind.BELONGS_TO

    @property
    def points_up(self) -> bool:
        """True when the link is stored from the detailed element to the abstract one."""
        return self in (LinkKind.IMPLEMENTS, LinkKind.COVERS, LinkKind.REALIZES)

    @property
    def verb(self) -> str:
        """Infinitive used in diagnostics: ``ViewFunction may not Realize Module``."""
        return _LINK_VERBS[self]

    @classmethod
    def stored_kinds(cls) -> tuple["LinkKind", ...]:
        """Every kind that may appear on a stored link."""
        return tuple(kind for kind in cls if kind.stored)


_LINK_VERBS: Final[dict[LinkKind, str]] = {
    LinkKind.CONTAINS: "Contain",
    LinkKind.IMPLEMENTS: "Implement",
    LinkKind.COVERS: "Cover",
    LinkKind.REALIZES: "Realize",
    LinkKind.FLOWS_TO: "Flow to",
    LinkKind.BELONGS_TO: "Belong to",
}


class Direction(StrEnum):
    """Trace direction: ``down`` toward detail, ``up`` toward abstraction."""

    UP = "up"
    DOWN = "down"


_K = ElementKind

LEGAL_LINKS: Final[frozenset[tuple[ElementKind, ElementKind, LinkKind]]] = frozenset(
    {
        (_K.BUSINESS_PROCESS, _K.BUSINESS_FUNCTION, LinkKind.CONTAINS),
        (_K.BUSINESS_FUNCTION, _K.BUSINESS_FUNCTION, LinkKind.CONTAINS),
        (_K.BUSINESS_FUNCTION, _K.BUSINESS_OPERATION, LinkKind.CONTAINS),
        (_K.OPERATIONAL_SERVICE, _K.AUTOMATED_FUNCTION, LinkKind.CONTAINS),
        (_K.OPERATIONAL_SERVICE, _K.DIALOG, LinkKind.CONTAINS),
        (_K.DIALOG, _K.VIEW_FUNCTION, LinkKind.CONTAINS),
        (_K.COMPONENT, _K.MODULE, LinkKind.CONTAINS),
        (_K.COMPONENT, _K.CLASS, LinkKind.CONTAINS),
        (_K.CLASS, _K.METHOD, LinkKind.CONTAINS),
        (_K.OPERATIONAL_SERVICE, _K.BUSINESS_OPERATION, LinkKind.IMPLEMENTS),
        (_K.VIEW_FUNCTION, _K.AUTOMATED_FUNCTION, LinkKind.COVERS),
        (_K.MODULE, _K.VIEW_FUNCTION, LinkKind.REALIZES),
        (_K.METHOD, _K.MODULE, LinkKind.REALIZES),
        (_K.VIEW_FUNCTION, _K.DIALOG, LinkKind.FLOWS_TO),
    }
)


def is_legal_link(source: ElementKind, target: ElementKind, kind: LinkKind) -> bool:
    """Check a (source kind, target kind, link kind) triple against the legal-link table."""
    return (source, target, kind) in LEGAL_LINKS


# Recognised attribute keys and the kinds allowed to carry them. `desc` is free.
RESTRICTED_ATTRS: Final[dict[str, frozenset[ElementKind]]] = {
    "form": frozenset({_K.DIALOG}),
    "kind-tag": frozenset({_K.COMPONENT}),
    "params": frozenset({_K.MODULE, _K.METHOD}),
}

COMPONENT_KIND_TAGS: Final[frozenset[str]] = frozenset({"subsystem", "external"})
