"""
Pruebas de los registros JSON, de los esquemas publicados y del renderizado de texto.
"""

import json

import pytest

from conftest import golden
from src.core.rules import PropositionId, validate
from src.core.services.auditor import AuditCampaign, AuditConfig, CampaignConfig, SpaceAuditor
from src.core.services.connectives import ConnectiveEngine, ZMode, meet
from src.core.services.equivalence import EquivalenceAnalyzer
from src.core.services.structure import StructureAnalyzer
from src.infrastructure.export import renderers, serializers
from src.infrastructure.export.schemas import available_schemas, schema_errors


def _valid(record, schema):
    assert schema_errors(record, schema) == []
    # Debe sobrevivir a la serialización canónica
    assert json.loads(serializers.dumps(record)) == record


def test_published_schemas():
    assert available_schemas() == [
        "audit", "campaign", "classes", "detect_boolean", "implies", "join",
        "lub", "meet", "minimal_inconsistent", "negation", "space", "validation",
    ]


def test_dumps_is_canonical():
    assert serializers.dumps({"b": 1, "a": "ñ"}) == '{\n  "a": "ñ",\n  "b": 1\n}\n'


class TestRecords:

    def test_space_document(self, l2):
        document = serializers.space_document(l2)
        _valid(document, "space")
        assert serializers.dumps(document) == golden("l2_space.json")

    def test_validation(self, l2):
        record = serializers.validation_record(l2, validate(l2))
        _valid(record, "validation")
        assert serializers.dumps(record) == golden("l2_validate.json")

    def test_classes(self, l2):
        record = serializers.classes_record(l2, EquivalenceAnalyzer(l2).quotient())
        _valid(record, "classes")
        assert record["class_count"] == 10
        assert record["classes"][0]["representative"] == []

    def test_negation(self, l2):
        result = ConnectiveEngine(l2).find_negations(l2.subset(["not_v1", "not_v2"]))
        record = serializers.negation_record(l2, result)
        _valid(record, "negation")
        assert serializers.dumps(record) == golden("l2_negate.json")
        assert renderers.render_negation(record) == golden("l2_negate.txt")

    def test_implies(self, b2):
        lhs, rhs = b2.subset(["a"]), b2.subset(["a|b"])
        verdict = ConnectiveEngine(b2).implies(lhs, rhs)
        record = serializers.implies_record(b2, lhs, rhs, verdict, ZMode.SUBSETS)
        _valid(record, "implies")
        assert record["verdict"] == "true"

    @pytest.mark.parametrize("x, y, expected", [("a", "b", "a|b"), ("a", "1", None)])
    def test_join(self, b2, x, y, expected):
        result = ConnectiveEngine(b2, ZMode.ELEMENTS).join_search(b2.point(x), b2.point(y))
        record = serializers.join_record(b2, result)
        _valid(record, "join")
        assert record["join"] == expected
        assert record["mode"] == "elements"

    def test_meet(self, l2):
        lhs, rhs = l2.subset(["v1"]), l2.subset(["not_v1"])
        record = serializers.meet_record(l2, lhs, rhs, meet(lhs, rhs))
        _valid(record, "meet")
        assert record == {"lhs": ["v1"], "rhs": ["not_v1"], "meet": ["v1", "not_v1"], "consistent": False}

    def test_lub(self, b2):
        report = ConnectiveEngine(b2).lub_check(b2.point("a"), b2.point("b"))
        record = serializers.lub_record(b2, report)
        _valid(record, "lub")
        assert record["passed"] and record["skipped"] == 1

    def test_minimal_inconsistent(self, l3):
        family = StructureAnalyzer(l3, cap=4).minimal_inconsistent_sets(allow_partial=True)
        record = serializers.minimal_inconsistent_record(l3, family)
        _valid(record, "minimal_inconsistent")
        assert record["complete"] is False
        assert record["max_size_searched"] == 3

    def test_detect_boolean(self, b2):
        record = serializers.detect_boolean_record(b2, StructureAnalyzer(b2).detect_boolean())
        _valid(record, "detect_boolean")
        assert record["is_boolean"] is False
        assert [c["name"] for c in record["conditions"]][0] == "doubletons"

    def test_audit(self, l2):
        report = SpaceAuditor(l2, AuditConfig(), "L2").audit([PropositionId.P02, PropositionId.P07])
        record = serializers.audit_record(report)
        _valid(record, "audit")
        absorption = record["results"][1]
        assert absorption["status"] == "refuted"
        assert absorption["counterexample"]["bindings"] == {"x": ["v1"], "y": ["v2"]}

    def test_campaign(self):
        config = CampaignConfig(literal_vars=[1], boolean_vars=[], random_seeds=2, random_points=[1, 4],
                                random_maximal=3, propositions=[PropositionId.P07])
        record = serializers.campaign_record(AuditCampaign(config, AuditConfig()).run())
        _valid(record, "campaign")
        assert [e["name"] for e in record["entries"]] == ["L1", "R0-1p", "R1-4p"]
        assert record["entries"][1]["error"]


class TestSchemaErrors:

    def test_error_paths(self):
        errors = schema_errors({"points": ["p", 3], "maximal_consistent": []}, "space")
        assert len(errors) == 1
        assert errors[0].startswith("points/1:")

    def test_root_error(self):
        assert schema_errors([], "space")[0].startswith("(raíz):")


class TestRenderers:

    def test_validation_text(self, l2):
        text = renderers.render_validation(serializers.validation_record(l2, validate(l2)))
        assert text == "Espacio válido: 4 puntos, 4 maximales\n"

    def test_every_renderer_ends_with_newline(self, b2):
        engine = ConnectiveEngine(b2)
        texts = [
            renderers.render_join(serializers.join_record(b2, engine.join_search(b2.point("a"), b2.point("b")))),
            renderers.render_lub(serializers.lub_record(b2, engine.lub_check(b2.point("a"), b2.point("b")))),
            renderers.render_detect_boolean(
                serializers.detect_boolean_record(b2, StructureAnalyzer(b2).detect_boolean())),
        ]
        for text in texts:
            assert text.endswith("\n")
        assert texts[0].startswith("a ∨ b = a|b")
