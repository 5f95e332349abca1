"""Brute-force reference computations over raw link records.

None of these helpers call the graph queries, the trace engine or the
validator; they only read ``model.links`` and ``model.elements``.
"""

from collections.abc import Iterable

from archloom.model import ArchitectureModel, ElementKind, LinkKind

_POINTS_UP = (LinkKind.IMPLEMENTS, LinkKind.COVERS, LinkKind.REALIZES)

Edge = tuple[str, str, LinkKind]


def refinement_edges(model: ArchitectureModel, *, include_flows: bool = False) -> set[Edge]:
    """Every stored link as ``(abstract, detailed, kind)``."""
    edges: set[Edge] = set()
    for link in model.links:
        if link.external:
            continue
        if link.kind is LinkKind.FLOWS_TO and not include_flows:
            continue
        if link.kind in _POINTS_UP:
            edges.add((link.target, link.source, link.kind))
        else:
            edges.add((link.source, link.target, link.kind))
    return edges


def depths(edges: Iterable[Edge], root: str, *, up: bool = False) -> dict[str, int]:
    """Minimal hop count to every reachable node, by repeated frontier expansion."""
    pairs = [(v, u) if up else (u, v) for u, v, _ in edges]
    found = {root: 0}
    frontier = {root}
    depth = 0
    while frontier:
        depth += 1
        frontier = {v for u, v in pairs if u in frontier and v not in found}
        for node in frontier:
            found[node] = depth
    return found


def reachable(model: ArchitectureModel, seeds: Iterable[str], *, up: bool = False) -> set[str]:
    """Fixpoint closure of the seeds, seeds included."""
    pairs = {(v, u) if up else (u, v) for u, v, _ in refinement_edges(model)}
    closed = set(seeds)
    while True:
        grown = closed | {v for u, v in pairs if u in closed}
        if grown == closed:
            return closed
        closed = grown


def realizers(model: ArchitectureModel, target: str) -> set[str]:
    return {link.source for link in model.links if link.kind is LinkKind.REALIZES and link.target == target}


def realized(model: ArchitectureModel, source: str) -> set[str]:
    return {link.target for link in model.links if link.kind is LinkKind.REALIZES and link.source == source}


def realization_findings(model: ArchitectureModel) -> set[tuple[str, str]]:
    """Expected W102-W105 ``(code, element)`` pairs, recounted from the links."""
    findings: set[tuple[str, str]] = set()
    for element in model.elements.values():
        if element.kind is ElementKind.VIEW_FUNCTION and not realizers(model, element.id):
            findings.add(("W102", element.id))
        if element.kind is ElementKind.MODULE:
            if not realizers(model, element.id):
                findings.add(("W103", element.id))
            if not realized(model, element.id):
                findings.add(("W104", element.id))
        if element.kind is ElementKind.METHOD and not realized(model, element.id):
            findings.add(("W105", element.id))
    return findings


def derivation_paths(model: ArchitectureModel) -> set[tuple[str, ...]]:
    """Every maximal operation-to-method path, padded to six cells."""

    def successors(node: str) -> list[str]:
        kind = model.elements[node].kind
        found: list[str] = []
        for link in model.links:
            if link.external:
                continue
            source_kind = model.elements[link.source].kind
            target_kind = model.elements[link.target].kind
            if kind is ElementKind.BUSINESS_OPERATION and link.kind is LinkKind.IMPLEMENTS and link.target == node:
                found.append(link.source)
            elif (
                link.kind is LinkKind.CONTAINS
                and link.source == node
                and (source_kind, target_kind)
                in (
                    (ElementKind.OPERATIONAL_SERVICE, ElementKind.DIALOG),
                    (ElementKind.DIALOG, ElementKind.VIEW_FUNCTION),
                )
            ):
                found.append(link.target)
            elif (
                link.kind is LinkKind.REALIZES
                and link.target == node
                and kind in (ElementKind.VIEW_FUNCTION, ElementKind.MODULE)
            ):
                found.append(link.source)
        return found

    paths: set[tuple[str, ...]] = set()

    def walk(path: list[str]) -> None:
        nexts = successors(path[-1])
        if not nexts:
            paths.add(tuple(path + [""] * (6 - len(path))))
            return
        for node in nexts:
            walk([*path, node])

    for element in model.elements.values():
        if element.kind is ElementKind.BUSINESS_OPERATION:
            walk([element.id])
    return paths
