"""Five-layer metamodel, resolved model graph and canonical interchange.

Provides the element/link type system shared by every other archloom module.
"""

from archloom.model.diagnostics import Diagnostic, Severity, default_severity, has_errors
from archloom.model.elements import ArchElement, Link, ModelMeta, SourceSpan, join_params
from archloom.model.exceptions import (
    ArchloomError,
    CanonicalFormatError,
    ModelBuildError,
    RuleConfigError,
    SubjectKindError,
    UnknownElementError,
    UnknownKindError,
    UnsupportedFormatError,
)
from archloom.model.graph import ArchitectureModel, build_model, neighbors
from archloom.model.metamodel import (
    LEGAL_LINKS,
    Direction,
    ElementKind,
    Layer,
    LinkKind,
    is_legal_link,
)

# Canonical interchange last: it pulls in the internal exception mapper.
from archloom.model.canonical import export_canonical, import_canonical  # noqa: I001

__all__ = [  # noqa: RUF022
    # Metamodel
    "Direction",
    "ElementKind",
    "LEGAL_LINKS",
    "Layer",
    "LinkKind",
    "is_legal_link",
    # Records
    "ArchElement",
    "Diagnostic",
    "Link",
    "ModelMeta",
    "Severity",
    "SourceSpan",
    "default_severity",
    "has_errors",
    "join_params",
    # Model
    "ArchitectureModel",
    "build_model",
    "neighbors",
    "export_canonical",
    "import_canonical",
    # Exceptions
    "ArchloomError",
    "CanonicalFormatError",
    "ModelBuildError",
    "RuleConfigError",
    "SubjectKindError",
    "UnknownElementError",
    "UnknownKindError",
    "UnsupportedFormatError",
]
