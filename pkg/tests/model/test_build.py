"""Tests for build_model: the checks that turn raw records into a sealed model."""

import itertools

import pytest

from archloom.model import (
    ArchElement,
    ArchitectureModel,
    Diagnostic,
    ElementKind,
    LinkKind,
    SourceSpan,
    build_model,
    is_legal_link,
)
from archloom.model.elements import Link
from tests.builders import element, link

K = ElementKind


def _codes(result: ArchitectureModel | list[Diagnostic]) -> list[str]:
    assert isinstance(result, list), "expected diagnostics, got a model"
    return sorted(d.code for d in result)


class TestBuildModelExamples:
    """Worked examples of build_model."""

    def test_empty_input_is_a_valid_model(self) -> None:
        """No elements and no links build an empty model."""
        model = build_model([], [])
        assert isinstance(model, ArchitectureModel)
        assert len(model) == 0
        assert model.links == ()

    def test_operation_implemented_by_service(self) -> None:
        """F01 contains OPTC01.03, which SRTS01.03 implements."""
        model = build_model(
            [
                element("F01", K.BUSINESS_FUNCTION, "Prepare documents"),
                element("OPTC01.03", K.BUSINESS_OPERATION, "Initiate the registration"),
                element("SRTS01.03", K.OPERATIONAL_SERVICE, "Initiation of the registration"),
            ],
            [
                link("F01", "OPTC01.03", LinkKind.CONTAINS),
                link("SRTS01.03", "OPTC01.03", LinkKind.IMPLEMENTS),
            ],
        )
        assert isinstance(model, ArchitectureModel)
        assert len(model) == 3
        assert len(model.links) == 2
        assert model.parent("OPTC01.03") is not None
        assert [e.id for e in model.sources_of("OPTC01.03", LinkKind.IMPLEMENTS)] == ["SRTS01.03"]

    def test_dangling_reference_reports_e002_at_the_link(self) -> None:
        """A Realizes link to an undeclared view function is E002 naming it, at the link's span."""
        span = SourceSpan(file="components.arch", line=2, column=60)
        result = build_model(
            [element("GetProcessStatus", K.MODULE)],
            [Link(source="GetProcessStatus", target="VF99", kind=LinkKind.REALIZES, src=span)],
        )
        assert _codes(result) == ["E002"]
        assert isinstance(result, list)
        assert result[0].element == "VF99"
        assert "VF99" in result[0].message
        assert result[0].span == span

    def test_reversed_realizes_reports_e003(self) -> None:
        """A view function may not realize a module."""
        result = build_model(
            [element("VF05", K.VIEW_FUNCTION, "Choose type"), element("GetProcessStatus", K.MODULE)],
            [link("VF05", "GetProcessStatus", LinkKind.REALIZES)],
        )
        assert _codes(result) == ["E003"]
        assert isinstance(result, list)
        assert "ViewFunction may not Realize Module" in result[0].message

    def test_duplicate_id_reports_e001(self) -> None:
        """Two elements with one id are rejected."""
        result = build_model([element("X1", K.CLASS), element("X1", K.METHOD)], [])
        assert _codes(result) == ["E001"]

    @pytest.mark.parametrize(
        ("record", "fragment"),
        [
            (element("1bad", K.CLASS), "invalid element id"),
            (element("C1", K.CLASS, " "), "empty name"),
            (element("C1", K.CLASS, "C", form="x"), "attribute 'form'"),
            (element("CP", K.COMPONENT, "C", **{"kind-tag": "library"}), "kind-tag"),
        ],
    )
    def test_invalid_record_reports_e004(self, record: ArchElement, fragment: str) -> None:
        """Id pattern, blank names, misplaced attributes and unknown kind tags are E004."""
        result = build_model([record], [])
        assert _codes(result) == ["E004"]
        assert isinstance(result, list)
        assert fragment in result[0].message

    def test_double_parent_reports_e005(self) -> None:
        """An operation contained in two functions is rejected."""
        result = build_model(
            [
                element("F1", K.BUSINESS_FUNCTION),
                element("F2", K.BUSINESS_FUNCTION),
                element("O1", K.BUSINESS_OPERATION),
            ],
            [link("F1", "O1", LinkKind.CONTAINS), link("F2", "O1", LinkKind.CONTAINS)],
        )
        assert _codes(result) == ["E005"]

    def test_contains_cycle_reports_e005(self) -> None:
        """Functions containing each other form a cycle."""
        result = build_model(
            [element("F1", K.BUSINESS_FUNCTION), element("F2", K.BUSINESS_FUNCTION)],
            [link("F1", "F2", LinkKind.CONTAINS), link("F2", "F1", LinkKind.CONTAINS)],
        )
        assert _codes(result) == ["E005"]

    def test_belongs_to_is_never_stored(self) -> None:
        """BelongsTo is derived from Contains; storing it is E003."""
        result = build_model(
            [element("CP1", K.COMPONENT), element("MD1", K.MODULE)],
            [link("MD1", "CP1", LinkKind.BELONGS_TO)],
        )
        assert _codes(result) == ["E003"]

    def test_external_flow_needs_no_target_element(self) -> None:
        """An external FlowsTo target is a free label, not a reference."""
        model = build_model(
            [element("VF10", K.VIEW_FUNCTION, "Exit")],
            [Link(source="VF10", target="OPTC01.02 dialog", kind=LinkKind.FLOWS_TO, external=True)],
        )
        assert isinstance(model, ArchitectureModel)

    def test_external_target_only_for_flows(self) -> None:
        """Only a view function's FlowsTo may point outside the model."""
        result = build_model(
            [element("MD1", K.MODULE)],
            [Link(source="MD1", target="elsewhere", kind=LinkKind.REALIZES, external=True)],
        )
        assert _codes(result) == ["E003"]

    def test_every_violation_is_collected(self) -> None:
        """Checks do not stop at the first failure."""
        result = build_model(
            [element("A1", K.CLASS), element("A1", K.CLASS), element("9x", K.METHOD)],
            [link("A1", "NOPE", LinkKind.CONTAINS)],
        )
        assert _codes(result) == ["E001", "E002", "E004"]


class TestLegalLinkTable:
    """The full cross product of element kinds and stored link kinds."""

    def test_cross_product_agrees_with_the_table(self) -> None:
        """Each of the 605 triples builds exactly when the table allows it."""
        triples = list(itertools.product(ElementKind, ElementKind, LinkKind.stored_kinds()))
        assert len(triples) == 605
        for source_kind, target_kind, link_kind in triples:
            result = build_model(
                [element("S1", source_kind), element("T1", target_kind)],
                [link("S1", "T1", link_kind)],
            )
            legal = is_legal_link(source_kind, target_kind, link_kind)
            assert isinstance(result, ArchitectureModel) == legal, (
                source_kind,
                target_kind,
                link_kind,
            )
            if not legal:
                assert _codes(result) == ["E003"]

    def test_belongs_to_is_in_no_legal_triple(self) -> None:
        """No pair of kinds may store BelongsTo."""
        assert not any(
            is_legal_link(source, target, LinkKind.BELONGS_TO)
            for source, target in itertools.product(ElementKind, ElementKind)
        )

    def test_every_kind_has_one_layer(self) -> None:
        """Kinds map onto the five layers, business to data."""
        assert {kind.layer.value for kind in ElementKind} == {1, 2, 3, 4, 5}
        assert K.METHOD.layer.label == "Data"


class TestElementRecords:
    """Element records stay sealed once built."""

    def test_attrs_cannot_be_changed(self) -> None:
        """The attribute map of a built element is read-only."""
        record = element("MD1", K.MODULE, desc="reads the status")
        with pytest.raises(TypeError):
            record.attrs["desc"] = "changed"  # type: ignore[index]
        assert record.desc == "reads the status"

    def test_attrs_are_copied_on_construction(self) -> None:
        """Changing the dict a record was built from leaves the record alone."""
        source = {"params": "UserID"}
        record = ArchElement(id="MD1", kind=K.MODULE, name="MD1", attrs=source)
        source["params"] = "Other"
        assert record.params == ("UserID",)

    def test_default_attrs_are_read_only(self) -> None:
        """An element built without attributes gets a read-only empty map."""
        record = ArchElement(id="C1", kind=K.CLASS, name="C1")
        with pytest.raises(TypeError):
            record.attrs["form"] = "x"  # type: ignore[index]

    def test_attrs_dump_as_sorted_dict(self) -> None:
        """Serialization yields a plain dict in key order."""
        record = element("MD1", K.MODULE, params="A", desc="d")
        assert record.model_dump()["attrs"] == {"desc": "d", "params": "A"}
        assert list(record.model_dump()["attrs"]) == ["desc", "params"]
