"""
Pruebas del auditor de proposiciones y de las campañas.
"""

import pytest

from src.core.rules import PROPOSITION_REGISTRY, PropositionId, VariableKind, parse_propositions
from src.core.services.auditor import (
    COLLAPSED_INSTANCE,
    JOIN_UNDEFINED,
    MISSING_NEGATION,
    NON_ALGEBRAIC,
    AuditCampaign,
    AuditConfig,
    CampaignConfig,
    PropositionStatus,
    SpaceAuditor,
    audit_space,
)
from src.core.services.connectives import ZMode
from src.infrastructure.export.serializers import campaign_record
from src.shared.exceptions import CapExceededError, InvalidArgumentError

P = PropositionId


@pytest.fixture(scope="module")
def l2_report(l2):
    return SpaceAuditor(l2, AuditConfig(), "L2").audit()


@pytest.fixture(scope="module")
def b2_report(b2):
    return SpaceAuditor(b2, AuditConfig(), "B2").audit()


class TestRegistry:

    def test_sixteen_propositions(self):
        assert [p.value for p in PROPOSITION_REGISTRY] == [f"P{i:02d}" for i in range(1, 17)]

    def test_set_variables(self):
        assert PROPOSITION_REGISTRY[P.P02].quantifies_sets
        assert [kind for _, kind in PROPOSITION_REGISTRY[P.P02].variables] == [VariableKind.SET] * 3
        assert not PROPOSITION_REGISTRY[P.P07].quantifies_sets

    def test_disputed(self):
        disputed = {p for p, spec in PROPOSITION_REGISTRY.items() if spec.disputed}
        assert disputed == {P.P03, P.P07, P.P14, P.P16}

    def test_parse_list(self):
        assert parse_propositions("p07, P02,P07") == [P.P02, P.P07]
        with pytest.raises(InvalidArgumentError):
            parse_propositions("P02,P99")


class TestLiteralSpace:

    def test_only_absorption_is_refuted(self, l2_report):
        assert l2_report.refuted == [P.P07]
        assert len(l2_report.results) == 16

    def test_absorption_counterexample(self, l2_report):
        result = l2_report.result(P.P07)
        assert result.status is PropositionStatus.REFUTED
        assert result.refuted_count == 8
        assert result.skipped_count == 8
        assert result.skip_reasons == {COLLAPSED_INSTANCE: 8}
        assert result.counterexample.bindings == {"x": ["v1"], "y": ["v2"]}
        assert result.counterexample.witnesses == {"kappa": [], "negation_of_y": ["not_v2"]}

    def test_congruence_counts_every_triple(self, l2_report):
        result = l2_report.result(P.P02)
        assert result.status is PropositionStatus.HOLDS
        assert result.total_instances == 16 ** 3
        assert result.instances_checked == 16 ** 3

    def test_least_upper_bound_skips_undefined_joins(self, l2_report):
        result = l2_report.result(P.P14)
        assert result.status is PropositionStatus.HOLDS
        assert result.skip_reasons == {JOIN_UNDEFINED: 48}
        assert result.instances_checked == 16

    def test_empty_set(self, l2_report):
        result = l2_report.result(P.P01)
        assert result.status is PropositionStatus.HOLDS
        assert result.total_instances == 1

    def test_literal_space_arises_from_algebra(self, l2_report):
        assert l2_report.result(P.P03).status is PropositionStatus.HOLDS

    def test_modes_agree(self, l2_report):
        assert l2_report.mode_cross_checked
        assert l2_report.mode_divergences == []

    def test_descriptor_and_domain(self, l2_report):
        assert l2_report.space["name"] == "L2"
        assert l2_report.space["maximal_count"] == 4
        assert l2_report.set_domain.kind == "all_subsets"
        assert l2_report.set_domain.size == 16


class TestFullBooleanSpace:

    def test_refuted_propositions(self, b2_report):
        assert set(b2_report.refuted) == {P.P03, P.P07}

    def test_boolean_detection_reports_every_failed_condition(self, b2_report):
        counterexample = b2_report.result(P.P03).counterexample
        for name in ("doubletons", "disjoint", "cover", "exactness"):
            assert f"'{name}'" in counterexample.message
        assert set(counterexample.witnesses) == {
            "doubletons_1", "disjoint_1", "disjoint_2", "cover_1", "exactness_1",
        }
        assert len(counterexample.witnesses["doubletons_1"]) == 3
        assert counterexample.witnesses["cover_1"] == ["1"]

    def test_overlapping_minimal_doubletons_witness(self, b2_report):
        witnesses = b2_report.result(P.P03).counterexample.witnesses
        first, second = witnesses["disjoint_1"], witnesses["disjoint_2"]
        assert len(first) == 2 and len(second) == 2
        assert first != second
        assert set(first) & set(second)

    @pytest.mark.parametrize("proposition", [P.P13, P.P14, P.P16])
    def test_lattice_laws_hold(self, b2_report, proposition):
        result = b2_report.result(proposition)
        assert result.status is PropositionStatus.HOLDS
        assert set(result.skip_reasons) <= {MISSING_NEGATION, JOIN_UNDEFINED}

    def test_bounded_set_domain(self, b2_report):
        domain = b2_report.set_domain
        assert domain.kind == "bounded"
        assert domain.max_size == 3
        assert domain.includes_maximal


class TestAuditorOptions:

    def test_selected_propositions(self, l2):
        report = SpaceAuditor(l2, AuditConfig()).audit([P.P09, P.P04])
        assert [r.proposition for r in report.results] == [P.P04, P.P09]
        assert report.set_domain is None

    def test_non_algebraic_space_skips_boolean_check(self, builder):
        space = builder.random_space(4, 3, seed=0)
        result = SpaceAuditor(space, AuditConfig()).audit([P.P03]).result(P.P03)
        assert result.status is PropositionStatus.SKIPPED
        assert result.skip_reasons == {NON_ALGEBRAIC: 1}

    def test_cap_names_the_proposition(self, l3):
        with pytest.raises(CapExceededError) as exc:
            SpaceAuditor(l3, AuditConfig(cap=4)).audit([P.P04, P.P02])
        assert exc.value.proposition == "P02"

    def test_elements_mode_runs_above_cap(self, l3):
        report = SpaceAuditor(l3, AuditConfig(mode=ZMode.ELEMENTS, cap=4)).audit([P.P04, P.P05])
        assert report.refuted == []
        assert not report.mode_cross_checked

    def test_audit_space_mode_override(self, l2):
        report = audit_space(l2, [P.P09], mode="elements", config=AuditConfig())
        assert report.config.mode is ZMode.ELEMENTS


@pytest.fixture(scope="module")
def small_campaign():
    return CampaignConfig(literal_vars=[1, 2], boolean_vars=[1], random_seeds=2,
                          random_points=[4], random_maximal=3, propositions=[P.P01, P.P07])


class TestCampaign:

    def test_members(self, small_campaign):
        assert [m.name for m in small_campaign.members()] == ["L1", "L2", "B1", "R0-4p", "R1-4p"]

    def test_summary(self, small_campaign):
        result = AuditCampaign(small_campaign, AuditConfig()).run()
        assert result.errors == []
        empty_set, absorption = result.summary
        assert empty_set.proposition is P.P01
        assert empty_set.holds == 5
        name, counterexample = absorption.first_counterexample
        assert name == "L2"
        assert counterexample.bindings == {"x": ["v1"], "y": ["v2"]}
        l1 = result.entries[0].report.result(P.P07)
        assert l1.status is PropositionStatus.SKIPPED

    def test_workers_do_not_change_results(self, small_campaign):
        sequential = AuditCampaign(small_campaign, AuditConfig()).run()
        parallel_config = CampaignConfig(**{**small_campaign.__dict__, "workers": 2})
        parallel = AuditCampaign(parallel_config, AuditConfig()).run()
        assert campaign_record(sequential) == campaign_record(parallel)

    def test_failed_member_is_reported(self, small_campaign):
        config = CampaignConfig(literal_vars=[], boolean_vars=[], random_seeds=1,
                                random_points=[1], random_maximal=1, propositions=[P.P01])
        result = AuditCampaign(config, AuditConfig()).run()
        assert [entry.name for entry in result.errors] == ["R0-1p"]
        assert result.summary[0].holds == 0
