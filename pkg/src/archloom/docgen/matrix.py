"""Traceability matrix: every maximal operation-to-method derivation path."""

import csv
import io
import logging
from typing import Final

import networkx as nx

from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import ElementKind, LinkKind

logger = logging.getLogger(__name__)

MATRIX_COLUMNS: Final[tuple[str, ...]] = ("operation", "service", "dialog", "viewfn", "module", "method")

MatrixRow = tuple[str, str, str, str, str, str]


def _chain_graph(model: ArchitectureModel) -> nx.DiGraph[str]:
    """Layered graph operation -> service -> dialog -> viewfn -> module -> method."""
    chain: nx.DiGraph[str] = nx.DiGraph()
    chain.add_nodes_from(e.id for e in model.of_kind(ElementKind.BUSINESS_OPERATION))
    for link in model.links:
        if link.external:
            continue
        source = model.element(link.source)
        target = model.element(link.target)
        if link.kind is LinkKind.IMPLEMENTS:
            chain.add_edge(target.id, source.id)
        elif link.kind is LinkKind.CONTAINS and (source.kind, target.kind) in (
            (ElementKind.OPERATIONAL_SERVICE, ElementKind.DIALOG),
            (ElementKind.DIALOG, ElementKind.VIEW_FUNCTION),
        ):
            chain.add_edge(source.id, target.id)
        elif link.kind is LinkKind.REALIZES:
            chain.add_edge(target.id, source.id)
    return chain


def matrix_rows(model: ArchitectureModel) -> list[MatrixRow]:
    """One row per maximal derivation path starting at a business operation.

    Paths that stop before the method column are padded with empty cells.
    Rows are sorted lexicographically.
    """
    chain = _chain_graph(model)
    rows: set[MatrixRow] = set()
    for operation in model.of_kind(ElementKind.BUSINESS_OPERATION):
        sinks = {node for node in nx.descendants(chain, operation.id) if chain.out_degree(node) == 0}
        paths = list(nx.all_simple_paths(chain, operation.id, sinks)) if sinks else [[operation.id]]
        for path in paths:
            padded = [*path, *([""] * (len(MATRIX_COLUMNS) - len(path)))]
            rows.add(
                (padded[0], padded[1], padded[2], padded[3], padded[4], padded[5]),
            )
    logger.debug("trace matrix: %d row(s)", len(rows))
    return sorted(rows)


def matrix_csv(rows: list[MatrixRow]) -> str:
    """CSV text with header, RFC 4180 quoting and LF line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(MATRIX_COLUMNS)
    writer.writerows(rows)
    return buffer.getvalue()
