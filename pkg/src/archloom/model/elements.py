"""Element and link records of an architecture model."""

from collections.abc import Mapping
from types import MappingProxyType

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from archloom.model.metamodel import ElementKind, LinkKind


class SourceSpan(BaseModel):
    """Location of a token in a source file. Line and column are 1-based."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    file: str
    line: int = Field(ge=1)
    column: int = Field(ge=1)
    length: int = Field(default=0, ge=0)

    def __str__(self) -> str:
        return f"{self.file}:{self.line}:{self.column}"


class ModelMeta(BaseModel):
    """Model name and free-form version string."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = ""
    version: str = ""


class ArchElement(BaseModel):
    """One node of an architecture model.

    Records are accepted as given; id pattern, non-empty name and attribute
    placement are checked by ``build_model`` so that every violation can be
    reported as a diagnostic instead of an exception.

    Attributes:
        id: Globally unique token, e.g. ``VF05`` or ``OPTC01.03``.
        kind: The element kind, which fixes the layer.
        name: Display name, may contain spaces.
        attrs: Read-only string map. Recognised keys are ``desc``, ``form``,
            ``params`` and ``kind-tag``.
        src: Declaration site, when the element comes from source text.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    id: str
    kind: ElementKind
    name: str
    attrs: Mapping[str, str] = Field(default_factory=dict, validate_default=True)
    src: SourceSpan | None = None

    @field_validator("attrs", mode="after")
    @classmethod
    def _seal_attrs(cls, attrs: Mapping[str, str]) -> Mapping[str, str]:
        return MappingProxyType(dict(attrs))

    @field_serializer("attrs")
    def _dump_attrs(self, attrs: Mapping[str, str]) -> dict[str, str]:
        return dict(sorted(attrs.items()))

    @property
    def desc(self) -> str:
        return self.attrs.get("desc", "")

    @property
    def form(self) -> str:
        return self.attrs.get("form", "")

    @property
    def params(self) -> tuple[str, ...]:
        """Ordered parameter identifiers of a Module or Method."""
        raw = self.attrs.get("params", "")
        return tuple(part.strip() for part in raw.split(",") if part.strip())

    def record(self) -> tuple[str, str, str, tuple[tuple[str, str], ...]]:
        """Comparable identity of the element, source location excluded."""
        return (self.id, self.kind.value, self.name, tuple(sorted(self.attrs.items())))


class Link(BaseModel):
    """A stored, typed, directed edge between two elements.

    Attributes:
        source: Id of the element the link starts from.
        target: Id of the element the link points to, or a free label when
            ``external`` is set.
        kind: The link kind.
        external: Only for FlowsTo: the target lies outside the model.
        src: Location of the reference that produced the link.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    source: str
    target: str
    kind: LinkKind
    external: bool = False
    src: SourceSpan | None = None

    def key(self) -> tuple[str, str, str, bool]:
        """Comparable identity of the link, source location excluded."""
        return (self.source, self.target, self.kind.value, self.external)


def join_params(params: list[str] | tuple[str, ...]) -> str:
    """Store an identifier list in the ``params`` attribute format."""
    return ", ".join(params)
