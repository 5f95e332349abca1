"""Result records of trace, coverage and diff, with canonical JSON shapes."""

from pydantic import BaseModel, ConfigDict, Field, field_validator

from archloom.model.metamodel import Direction, Layer, LinkKind


class TraceNode(BaseModel):
    """One reached element with its minimal hop distance from the root."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str
    depth: int = Field(ge=0)
    layer: Layer


class TraceEdge(BaseModel):
    """A followed derivation edge, oriented in traversal direction."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    source: str = Field(alias="from")
    target: str = Field(alias="to")
    kind: LinkKind


class TraceResult(BaseModel):
    """Layered reachability closure of one root element.

    ``nodes`` are sorted by (depth, id) and ``edges`` by (from, to, kind).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    root: str
    direction: Direction
    nodes: tuple[TraceNode, ...]
    edges: tuple[TraceEdge, ...]
    truncated: bool = False

    def ids(self) -> frozenset[str]:
        return frozenset(node.id for node in self.nodes)

    def at_depth(self, depth: int) -> list[str]:
        """Ids reached at exactly ``depth`` hops, sorted."""
        return [node.id for node in self.nodes if node.depth == depth]

    def depth_of(self, element_id: str) -> int | None:
        return next((node.depth for node in self.nodes if node.id == element_id), None)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)


class LayerCoverage(BaseModel):
    """Element count of one layer and how many of them are orphans or gaps."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    layer: Layer
    total: int = Field(default=0, ge=0)
    orphans: int = Field(default=0, ge=0)
    gaps: int = Field(default=0, ge=0)


class CoverageReport(BaseModel):
    """Per-layer completeness of a model and its operation-to-method chains.

    Attributes:
        layers: One entry per layer, in layer order.
        chains_complete: Business operations whose downstream closure reaches a method.
        chains_total: Business operations with at least one operational service.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    layers: tuple[LayerCoverage, ...]
    chains_complete: int = Field(default=0, ge=0)
    chains_total: int = Field(default=0, ge=0)

    def for_layer(self, layer: Layer) -> LayerCoverage:
        return next(entry for entry in self.layers if entry.layer is layer)

    def to_json(self) -> str:
        return self.model_dump_json()


def _sorted_ids(value: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(sorted(set(value)))


class ModelDiff(BaseModel):
    """Id-keyed difference between two model versions.

    Attributes:
        added: Ids present only in the new model.
        removed: Ids present only in the old model.
        modified: Ids whose kind, name, attributes or incident links changed.
        impact: Closure of the changed ids (new model, plus old model for removals).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    added: tuple[str, ...] = ()
    removed: tuple[str, ...] = ()
    modified: tuple[str, ...] = ()
    impact: tuple[str, ...] = ()

    @field_validator("added", "removed", "modified", "impact")
    @classmethod
    def _sort(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        return _sorted_ids(value)

    @property
    def empty(self) -> bool:
        return not (self.added or self.removed or self.modified)

    def to_json(self) -> str:
        return self.model_dump_json()
