"""Canonical JSON interchange: byte-stable export and validated import."""

import json
import logging

from pydantic import BaseModel, ConfigDict, Field

from archloom.model.elements import ArchElement, Link, ModelMeta, SourceSpan
from archloom.model.exceptions import ModelBuildError
from archloom.model.graph import ArchitectureModel, build_model
from archloom.model.mapper import CanonicalExceptionMapper
from archloom.model.metamodel import LinkKind

logger = logging.getLogger(__name__)


class LinkRecord(BaseModel):
    """Wire shape of a link: ``from``/``to`` instead of ``source``/``target``."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    from_: str = Field(alias="from")
    to: str
    kind: LinkKind
    external: bool = False
    src: SourceSpan | None = None

    @classmethod
    def from_link(cls, link: Link) -> "LinkRecord":
        return cls.model_validate(
            {
                "from": link.source,
                "to": link.target,
                "kind": link.kind,
                "external": link.external,
                "src": link.src,
            }
        )

    def to_link(self) -> Link:
        return Link(
            source=self.from_,
            target=self.to,
            kind=self.kind,
            external=self.external,
            src=self.src,
        )


class CanonicalDocument(BaseModel):
    """Top-level canonical document: ``meta``, ``elements``, ``links``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    meta: ModelMeta = Field(default_factory=ModelMeta)
    elements: list[ArchElement] = Field(default_factory=list)
    links: list[LinkRecord] = Field(default_factory=list)


def export_canonical(model: ArchitectureModel) -> bytes:
    """Serialize a model to canonical UTF-8 JSON.

    Elements are sorted by id and links by ``(from, to, kind)``; attribute maps
    are key-sorted, so two exports of the same model are byte-identical.

    Args:
        model: The model to export.

    Returns:
        The JSON document as UTF-8 bytes.
    """
    elements = sorted(model.elements.values(), key=lambda e: e.id)
    links = [
        LinkRecord.from_link(link)
        for link in sorted(model.links, key=lambda link: (*link.key(), str(link.src or "")))
    ]
    document = CanonicalDocument(meta=model.meta, elements=elements, links=links)
    payload = document.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def import_canonical(data: bytes | str, source_name: str | None = None) -> ArchitectureModel:
    """Decode a canonical JSON document into a sealed model.

    Args:
        data: The document, as bytes (UTF-8) or text.
        source_name: Optional stream name used in error positions.

    Returns:
        The rebuilt model.

    Raises:
        CanonicalFormatError: The stream is not UTF-8, not JSON, or not shaped
            like a canonical document (E102).
        UnknownKindError: An element or link names a kind that does not exist (E103).
        ModelBuildError: The records do not form a valid model (E0xx diagnostics).
    """
    mapper = CanonicalExceptionMapper()
    try:
        text = data.decode("utf-8") if isinstance(data, bytes) else data
        document = CanonicalDocument.model_validate(json.loads(text))
    except (UnicodeDecodeError, json.JSONDecodeError, ValueError, RecursionError) as e:
        raise mapper.map(e, source_name) from e

    built = build_model(
        document.elements,
        [record.to_link() for record in document.links],
        document.meta,
    )
    if isinstance(built, list):
        raise ModelBuildError(built)
    logger.debug("imported %d elements and %d links", len(built), len(built.links))
    return built
