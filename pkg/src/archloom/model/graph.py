"""The immutable, resolved architecture model and its builder."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping, Sequence
import logging
import re
from types import MappingProxyType
from typing import Final

import networkx as nx

from archloom.model.diagnostics import Diagnostic
from archloom.model.elements import ArchElement, Link, ModelMeta
from archloom.model.exceptions import UnknownElementError
from archloom.model.metamodel import (
    COMPONENT_KIND_TAGS,
    RESTRICTED_ATTRS,
    Direction,
    ElementKind,
    LinkKind,
    is_legal_link,
)

logger = logging.getLogger(__name__)

ID_PATTERN: Final[re.Pattern[str]] = re.compile(r"^[A-Za-z][A-Za-z0-9_.]*$")


class ArchitectureModel:
    """Sealed graph of elements and derivation links.

    Instances are produced by ``build_model`` (or the canonical importer) and
    never change afterwards, so they can be shared between threads freely.

    The derivation graph is held in refinement orientation: an edge ``u -> v``
    means ``v`` is a refinement of ``u``. Contains and FlowsTo keep their stored
    direction; Implements, Covers and Realizes, which are stored from the
    detailed element to the abstract one, are flipped.
    """

    __slots__ = ("_children", "_elements", "_links", "_meta", "_order", "_parent", "_refinement")

    def __init__(
        self,
        elements: Sequence[ArchElement],
        links: Sequence[Link],
        meta: ModelMeta | None = None,
    ) -> None:
        """Seal an already checked set of records. Use ``build_model`` instead."""
        self._elements: Mapping[str, ArchElement] = MappingProxyType({e.id: e for e in elements})
        self._links: tuple[Link, ...] = tuple(links)
        self._meta = meta or ModelMeta()
        self._order: Mapping[str, int] = MappingProxyType(
            {element_id: index for index, element_id in enumerate(self._elements)}
        )

        parent: dict[str, str] = {}
        children: dict[str, list[str]] = {}
        refinement: nx.MultiDiGraph[str] = nx.MultiDiGraph()
        refinement.add_nodes_from(self._elements)
        for link in self._links:
            if link.external:
                continue
            if link.kind is LinkKind.CONTAINS:
                parent[link.target] = link.source
                children.setdefault(link.source, []).append(link.target)
            if link.kind.points_up:
                refinement.add_edge(link.target, link.source, key=link.kind)
            else:
                refinement.add_edge(link.source, link.target, key=link.kind)
        for siblings in children.values():
            siblings.sort(key=self._order.__getitem__)

        self._parent: Mapping[str, str] = MappingProxyType(parent)
        self._children: Mapping[str, tuple[str, ...]] = MappingProxyType(
            {key: tuple(value) for key, value in children.items()}
        )
        self._refinement = nx.freeze(refinement)

    # ==================== Records ====================

    @property
    def elements(self) -> Mapping[str, ArchElement]:
        """Elements by id, in model order (declaration order for parsed models)."""
        return self._elements

    @property
    def links(self) -> tuple[Link, ...]:
        return self._links

    @property
    def meta(self) -> ModelMeta:
        return self._meta

    @property
    def refinement_graph(self) -> nx.MultiDiGraph[str]:
        """Frozen derivation graph in refinement orientation, edge keys are LinkKinds."""
        return self._refinement

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[ArchElement]:
        return iter(self._elements.values())

    def __contains__(self, element_id: object) -> bool:
        return element_id in self._elements

    def element(self, element_id: str) -> ArchElement:
        """Return the element with the given id.

        Raises:
            UnknownElementError: If the id does not resolve.
        """
        try:
            return self._elements[element_id]
        except KeyError:
            raise UnknownElementError(element_id) from None

    def order_of(self, element_id: str) -> int:
        return self._order[element_id]

    def of_kind(self, *kinds: ElementKind) -> list[ArchElement]:
        """Elements of the given kinds, in model order."""
        return [e for e in self._elements.values() if e.kind in kinds]

    # ==================== Structure ====================

    def links_from(self, element_id: str, kind: LinkKind | None = None) -> list[Link]:
        return [
            link
            for link in self._links
            if link.source == element_id and (kind is None or link.kind is kind)
        ]

    def links_to(self, element_id: str, kind: LinkKind | None = None) -> list[Link]:
        return [
            link
            for link in self._links
            if not link.external
            and link.target == element_id
            and (kind is None or link.kind is kind)
        ]

    def sources_of(self, element_id: str, kind: LinkKind) -> list[ArchElement]:
        """Elements with a stored ``kind`` link pointing at ``element_id``, in model order."""
        if kind.points_up:
            ids = {
                source
                for _, source, key in self._refinement.out_edges(element_id, keys=True)
                if key is kind
            }
        else:
            ids = {
                source
                for source, _, key in self._refinement.in_edges(element_id, keys=True)
                if key is kind
            }
        return self._sorted_by_order(ids)

    def targets_of(self, element_id: str, kind: LinkKind) -> list[ArchElement]:
        """Elements ``element_id`` points at through stored ``kind`` links, in model order."""
        if kind.points_up:
            ids = {
                target
                for target, _, key in self._refinement.in_edges(element_id, keys=True)
                if key is kind
            }
        else:
            ids = {
                target
                for _, target, key in self._refinement.out_edges(element_id, keys=True)
                if key is kind
            }
        return self._sorted_by_order(ids)

    def parent(self, element_id: str) -> ArchElement | None:
        """Contains parent of an element, if any."""
        parent_id = self._parent.get(element_id)
        return self._elements[parent_id] if parent_id is not None else None

    def children(self, element_id: str) -> list[ArchElement]:
        """Contains children of an element, in model order."""
        return [self._elements[child] for child in self._children.get(element_id, ())]

    def belongs_to(self, element_id: str) -> ArchElement | None:
        """Derived BelongsTo view: the Component owning a Module or Class."""
        owner = self.parent(element_id)
        if owner is not None and owner.kind is ElementKind.COMPONENT:
            return owner
        return None

    def neighbors(
        self,
        element_id: str,
        direction: Direction,
        kinds: Iterable[LinkKind] | None = None,
    ) -> list[tuple[ArchElement, LinkKind]]:
        """Single-step derivation neighbours, sorted by element id then link kind.

        Raises:
            UnknownElementError: If the id does not resolve.
        """
        if element_id not in self._elements:
            raise UnknownElementError(element_id)
        allowed = frozenset(kinds) if kinds is not None else None
        if direction is Direction.DOWN:
            edges = ((v, k) for _, v, k in self._refinement.out_edges(element_id, keys=True))
        else:
            edges = ((u, k) for u, _, k in self._refinement.in_edges(element_id, keys=True))
        found = {(other, kind) for other, kind in edges if allowed is None or kind in allowed}
        return [
            (self._elements[other], kind)
            for other, kind in sorted(found, key=lambda pair: (pair[0], pair[1].value))
        ]

    # ==================== Comparison ====================

    def structure(self) -> tuple[frozenset[tuple[object, ...]], Counter[tuple[str, str, str, bool]]]:
        """Element records and link multiset, source locations and meta excluded."""
        return (
            frozenset(e.record() for e in self._elements.values()),
            Counter(link.key() for link in self._links),
        )

    def structurally_equals(self, other: ArchitectureModel) -> bool:
        return self.structure() == other.structure()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArchitectureModel):
            return NotImplemented
        return self._meta == other._meta and self.structurally_equals(other)

    def __hash__(self) -> int:
        return hash((self._meta, len(self._elements), len(self._links)))

    def __repr__(self) -> str:
        return f"ArchitectureModel({len(self._elements)} elements, {len(self._links)} links)"

    def _sorted_by_order(self, ids: Iterable[str]) -> list[ArchElement]:
        return [self._elements[i] for i in sorted(ids, key=self._order.__getitem__)]


def neighbors(
    model: ArchitectureModel,
    element_id: str,
    direction: Direction,
    kinds: Iterable[LinkKind] | None = None,
) -> list[tuple[ArchElement, LinkKind]]:
    """Single-step derivation neighbours of an element.

    ``down`` returns refinements (Contains children, and the sources of
    Implements/Covers/Realizes links pointing at the element, and FlowsTo
    targets); ``up`` is the exact inverse.

    Args:
        model: The model to query.
        element_id: The element to start from.
        direction: ``Direction.DOWN`` toward detail or ``Direction.UP`` toward abstraction.
        kinds: Optional link-kind filter; every stored kind when omitted.

    Returns:
        ``(element, link kind)`` pairs sorted by element id.

    Raises:
        UnknownElementError: If ``element_id`` does not resolve (E101).
    """
    return model.neighbors(element_id, direction, kinds)


def build_model(
    elements: Sequence[ArchElement],
    links: Sequence[Link],
    meta: ModelMeta | None = None,
) -> ArchitectureModel | list[Diagnostic]:
    """Check raw records and seal them into an ``ArchitectureModel``.

    Every violation is collected before returning, not just the first:

    - E001 duplicate element id,
    - E002 link endpoint that does not resolve,
    - E003 link kind not legal for the endpoint kinds,
    - E004 invalid element record (id pattern, empty name, misplaced attribute),
    - E005 Contains double parent or cycle.

    Args:
        elements: Element records, in the order the model should keep.
        links: Link records.
        meta: Optional model name and version.

    Returns:
        The sealed model, or the list of diagnostics when any check fails.
    """
    diagnostics: list[Diagnostic] = []
    resolved: dict[str, ArchElement] = {}
    for element in elements:
        diagnostics.extend(_check_element(element))
        if element.id in resolved:
            diagnostics.append(
                Diagnostic.of(
                    "E001",
                    f"duplicate element id '{element.id}'",
                    element=element.id,
                    span=element.src,
                )
            )
            continue
        resolved[element.id] = element

    for link in links:
        diagnostics.extend(_check_link(link, resolved))

    diagnostics.extend(_check_contains_forest(links, resolved))

    if diagnostics:
        logger.debug("build_model rejected input with %d diagnostic(s)", len(diagnostics))
        return diagnostics
    return ArchitectureModel(list(resolved.values()), links, meta)


def _check_element(element: ArchElement) -> list[Diagnostic]:
    found: list[Diagnostic] = []

    def report(message: str) -> None:
        found.append(Diagnostic.of("E004", message, element=element.id, span=element.src))

    if not ID_PATTERN.match(element.id):
        report(f"invalid element id '{element.id}'")
    if not element.name.strip():
        report(f"{element.kind.value} '{element.id}' has an empty name")
    for key, allowed in RESTRICTED_ATTRS.items():
        if key in element.attrs and element.kind not in allowed:
            report(f"attribute '{key}' is not allowed on {element.kind.value} '{element.id}'")
    tag = element.attrs.get("kind-tag")
    if tag is not None and tag not in COMPONENT_KIND_TAGS:
        report(f"component '{element.id}' has unknown kind-tag '{tag}'")
    return found


def _check_link(link: Link, resolved: Mapping[str, ArchElement]) -> list[Diagnostic]:
    found: list[Diagnostic] = []
    if not link.kind.stored:
        found.append(
            Diagnostic.of(
                "E003",
                f"{link.kind.value} is derived and may not be stored "
                f"({link.source} -> {link.target})",
                element=link.source,
                span=link.src,
            )
        )
        return found

    endpoints = [link.source] if link.external else [link.source, link.target]
    missing = [endpoint for endpoint in endpoints if endpoint not in resolved]
    found.extend(
        Diagnostic.of(
            "E002",
            f"unresolved reference '{endpoint}' in {link.kind.value} link "
            f"{link.source} -> {link.target}",
            element=endpoint,
            span=link.src,
        )
        for endpoint in missing
    )
    if missing:
        return found

    source_kind = resolved[link.source].kind
    if link.external:
        if link.kind is not LinkKind.FLOWS_TO or source_kind is not ElementKind.VIEW_FUNCTION:
            found.append(
                Diagnostic.of(
                    "E003",
                    f"{source_kind.value} may not {link.kind.verb} an external target",
                    element=link.source,
                    span=link.src,
                )
            )
        return found

    target_kind = resolved[link.target].kind
    if not is_legal_link(source_kind, target_kind, link.kind):
        found.append(
            Diagnostic.of(
                "E003",
                f"{source_kind.value} may not {link.kind.verb} {target_kind.value} "
                f"({link.source} -> {link.target})",
                element=link.source,
                span=link.src,
            )
        )
    return found


def _check_contains_forest(
    links: Sequence[Link], resolved: Mapping[str, ArchElement]
) -> list[Diagnostic]:
    found: list[Diagnostic] = []
    contains: nx.DiGraph[str] = nx.DiGraph()
    parents: dict[str, str] = {}
    for link in links:
        if link.kind is not LinkKind.CONTAINS or link.external:
            continue
        if link.source not in resolved or link.target not in resolved:
            continue
        if link.target in parents and parents[link.target] != link.source:
            found.append(
                Diagnostic.of(
                    "E005",
                    f"'{link.target}' has two Contains parents "
                    f"('{parents[link.target]}' and '{link.source}')",
                    element=link.target,
                    span=link.src,
                )
            )
            continue
        parents[link.target] = link.source
        contains.add_edge(link.source, link.target)

    for component in nx.strongly_connected_components(contains):
        members = sorted(component)
        if len(members) == 1 and not contains.has_edge(members[0], members[0]):
            continue
        first = members[0]
        found.append(
            Diagnostic.of(
                "E005",
                f"Contains cycle through {', '.join(repr(m) for m in members)}",
                element=first,
                span=resolved[first].src,
            )
        )
    return found
