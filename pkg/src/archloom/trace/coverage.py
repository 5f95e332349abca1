"""Per-layer completeness metrics derived from the validator's gap and orphan rules."""

import logging

from archloom.model.graph import ArchitectureModel
from archloom.model.metamodel import Direction, ElementKind, Layer, LinkKind
from archloom.trace.engine import closure
from archloom.trace.results import CoverageReport, LayerCoverage
from archloom.validation import RuleCategory, rules_of

logger = logging.getLogger(__name__)


def coverage(model: ArchitectureModel) -> CoverageReport:
    """Count orphans and gaps per layer and complete operation chains.

    An element flagged both as a gap and as an orphan counts once, as an
    orphan.

    Args:
        model: A model that passed ``build_model``.

    Returns:
        The coverage report; all zeros for an empty model.
    """
    orphans = {
        hit.element
        for rule in rules_of(RuleCategory.ORPHAN)
        for hit in rule.check(model)
        if hit.element is not None
    }
    gaps = {
        hit.element
        for rule in rules_of(RuleCategory.GAP)
        for hit in rule.check(model)
        if hit.element is not None
    } - orphans

    layers: list[LayerCoverage] = []
    for layer in Layer:
        members = {element.id for element in model if element.kind.layer is layer}
        layers.append(
            LayerCoverage(
                layer=layer,
                total=len(members),
                orphans=len(members & orphans),
                gaps=len(members & gaps),
            )
        )

    chains_total = 0
    chains_complete = 0
    for operation in model.of_kind(ElementKind.BUSINESS_OPERATION):
        if not model.sources_of(operation.id, LinkKind.IMPLEMENTS):
            continue
        chains_total += 1
        reached = closure(model, [operation.id], Direction.DOWN)
        if any(model.element(node).kind is ElementKind.METHOD for node in reached):
            chains_complete += 1

    logger.debug("coverage: %d/%d complete chain(s)", chains_complete, chains_total)
    return CoverageReport(
        layers=tuple(layers),
        chains_complete=chains_complete,
        chains_total=chains_total,
    )
