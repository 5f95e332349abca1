"""Id-keyed comparison of two model versions."""

from collections import Counter
import logging

from archloom.model.graph import ArchitectureModel
from archloom.trace.engine import impact
from archloom.trace.results import ModelDiff

logger = logging.getLogger(__name__)


def _incident_links(model: ArchitectureModel) -> dict[str, Counter[tuple[str, str, str, bool]]]:
    incident: dict[str, Counter[tuple[str, str, str, bool]]] = {}
    for link in model.links:
        key = link.key()
        incident.setdefault(link.source, Counter())[key] += 1
        if not link.external and link.target != link.source:
            incident.setdefault(link.target, Counter())[key] += 1
    return incident


def diff(old: ArchitectureModel, new: ArchitectureModel) -> ModelDiff:
    """Compare two models element by element.

    Elements are matched by id: a rename is a modification, an id change is
    a removal plus an addition.

    Args:
        old: The earlier version.
        new: The later version.

    Returns:
        Added, removed and modified ids, and the impact of the change: the
        closure of added and modified ids on ``new`` joined with the closure
        of removed ids on ``old``.
    """
    old_ids = set(old.elements)
    new_ids = set(new.elements)
    added = new_ids - old_ids
    removed = old_ids - new_ids

    old_incident = _incident_links(old)
    new_incident = _incident_links(new)
    empty: Counter[tuple[str, str, str, bool]] = Counter()
    modified = {
        element_id
        for element_id in old_ids & new_ids
        if old.element(element_id).record() != new.element(element_id).record()
        or old_incident.get(element_id, empty) != new_incident.get(element_id, empty)
    }

    affected = set(impact(new, added | modified)) | set(impact(old, removed))
    logger.debug(
        "diff: %d added, %d removed, %d modified, %d impacted",
        len(added),
        len(removed),
        len(modified),
        len(affected),
    )
    return ModelDiff(
        added=tuple(added),
        removed=tuple(removed),
        modified=tuple(modified),
        impact=tuple(affected),
    )
