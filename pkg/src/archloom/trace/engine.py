"""Derivation closures: ``trace`` from one root and bidirectional ``impact``."""

from __future__ import annotations

from collections.abc import Iterable
import logging

import networkx as nx

from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import Direction, LinkKind
from archloom.trace.results import TraceEdge, TraceNode, TraceResult

logger = logging.getLogger(__name__)


def derivation_view(
    model: ArchitectureModel,
    direction: Direction,
    *,
    include_flows: bool = False,
) -> nx.MultiDiGraph[str]:
    """Read-only view of the derivation graph oriented for traversal.

    FlowsTo edges connect peers inside the functional layer and are hidden
    unless ``include_flows`` is set.
    """
    graph = model.refinement_graph
    if not include_flows:
        graph = nx.subgraph_view(
            graph, filter_edge=lambda _u, _v, key: key is not LinkKind.FLOWS_TO
        )
    if direction is Direction.UP:
        graph = nx.reverse_view(graph)
    return graph


def trace(
    model: ArchitectureModel,
    element_id: str,
    direction: Direction,
    max_depth: int | None = None,
    *,
    include_flows: bool = False,
) -> TraceResult:
    """Breadth-first derivation closure of one element.

    Args:
        model: The model to walk.
        element_id: The root.
        direction: ``DOWN`` toward detail, ``UP`` toward abstraction.
        max_depth: Hop limit; ``None`` for unlimited.
        include_flows: Also follow FlowsTo edges.

    Returns:
        Reached nodes with minimal depths, the edges followed, and whether a
        further layer existed beyond ``max_depth``.

    Raises:
        UnknownElementError: If ``element_id`` does not resolve (E101).
        ValueError: If ``max_depth`` is negative.
    """
    model.element(element_id)
    if max_depth is not None and max_depth < 0:
        msg = f"max_depth must be >= 0, got {max_depth}"
        raise ValueError(msg)

    view = derivation_view(model, direction, include_flows=include_flows)
    depths: dict[str, int] = {}
    truncated = False
    for depth, layer in enumerate(nx.bfs_layers(view, [element_id])):
        if max_depth is not None and depth > max_depth:
            truncated = True
            break
        for node in layer:
            depths[node] = depth

    expandable = {node for node, depth in depths.items() if max_depth is None or depth < max_depth}
    edges = {
        (source, target, kind)
        for source in expandable
        for _, target, kind in view.out_edges(source, keys=True)
        if target in depths
    }
    logger.debug(
        "trace %s %s: %d node(s), %d edge(s), truncated=%s",
        element_id,
        direction.value,
        len(depths),
        len(edges),
        truncated,
    )
    return TraceResult(
        root=element_id,
        direction=direction,
        nodes=tuple(
            TraceNode(id=node, depth=depth, layer=model.element(node).kind.layer)
            for node, depth in sorted(depths.items(), key=lambda item: (item[1], item[0]))
        ),
        edges=tuple(
            TraceEdge(source=source, target=target, kind=kind)
            for source, target, kind in sorted(edges, key=lambda e: (e[0], e[1], e[2].value))
        ),
        truncated=truncated,
    )


def closure(
    model: ArchitectureModel,
    seeds: Iterable[str],
    direction: Direction,
    *,
    include_flows: bool = False,
) -> set[str]:
    """Every element reachable from any seed in ``direction``, seeds included."""
    sources = list(dict.fromkeys(seeds))
    if not sources:
        return set()
    view = derivation_view(model, direction, include_flows=include_flows)
    return {node for layer in nx.bfs_layers(view, sources) for node in layer}


def impact(model: ArchitectureModel, seeds: Iterable[str]) -> frozenset[str]:
    """Elements to re-verify when the seeds change.

    The seeds' refinements are invalidated by the change, and everything those
    elements were derived to satisfy must be re-checked:
    ``seeds ∪ down*(seeds) ∪ up*(seeds ∪ down*(seeds))``.

    Raises:
        UnknownElementError: If any seed does not resolve (E101).
    """
    seed_list = sorted(set(seeds))
    for seed in seed_list:
        model.element(seed)
    below = closure(model, seed_list, Direction.DOWN)
    affected = below | closure(model, sorted(below), Direction.UP)
    logger.debug("impact of %d seed(s): %d element(s)", len(seed_list), len(affected))
    return frozenset(affected)
