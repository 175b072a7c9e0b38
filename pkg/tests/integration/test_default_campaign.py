"""
Campaña por defecto: L1..L3, B1, B2 y 50 espacios aleatorios de 4 a 6 puntos.

Fija los veredictos observados del corpus completo (regresión, no aval de
las proposiciones en disputa) y comprueba que dos ejecuciones con la misma
semilla producen el mismo reporte byte a byte.
"""

import pytest

from src.core.rules import PropositionId
from src.core.services.auditor import (
    JOIN_UNDEFINED,
    MISSING_NEGATION,
    NON_ALGEBRAIC,
    AuditCampaign,
    AuditConfig,
    CampaignConfig,
    PropositionStatus,
)
from src.infrastructure.export import dumps
from src.infrastructure.export.serializers import campaign_record

P = PropositionId

THEOREMS = [P.P01, P.P02, P.P04, P.P05, P.P06, P.P09, P.P10, P.P11, P.P12, P.P15]
LATTICE_LAWS = [P.P13, P.P14, P.P16]


def _run():
    return AuditCampaign(CampaignConfig(), AuditConfig()).run()


@pytest.fixture(scope="module")
def campaign():
    return _run()


@pytest.fixture(scope="module")
def reports(campaign):
    return {entry.name: entry.report for entry in campaign.entries}


def test_corpus(campaign):
    names = [entry.name for entry in campaign.entries]
    assert names[:5] == ["L1", "L2", "L3", "B1", "B2"]
    assert len(names) == 55
    assert names[5:8] == ["R0-4p", "R1-5p", "R2-6p"]
    assert campaign.errors == []


@pytest.mark.parametrize("proposition", THEOREMS)
def test_theorems_never_refuted(campaign, proposition):
    for entry in campaign.entries:
        result = entry.report.result(proposition)
        assert result.refuted_count == 0, entry.name
        assert result.status is not PropositionStatus.REFUTED, entry.name


def test_theorem_summary(campaign):
    for summary in campaign.summary:
        if summary.proposition in THEOREMS:
            assert summary.refuted == 0
            assert summary.first_counterexample is None


def test_absorption_first_refuted_on_l2(campaign):
    summary = next(s for s in campaign.summary if s.proposition is P.P07)
    name, counterexample = summary.first_counterexample
    assert name == "L2"
    assert counterexample.bindings == {"x": ["v1"], "y": ["v2"]}
    assert counterexample.witnesses["kappa"] == []


def test_boolean_origin_by_builder(reports):
    for name in ("L1", "L2", "L3"):
        assert reports[name].result(P.P03).status is PropositionStatus.HOLDS
    b2 = reports["B2"].result(P.P03)
    assert b2.status is PropositionStatus.REFUTED
    first, second = b2.counterexample.witnesses["disjoint_1"], b2.counterexample.witnesses["disjoint_2"]
    assert set(first) & set(second)
    for name, report in reports.items():
        if name.startswith("R"):
            assert report.result(P.P03).skip_reasons == {NON_ALGEBRAIC: 1}


@pytest.mark.parametrize("proposition", LATTICE_LAWS)
def test_lattice_laws_on_full_boolean_space(reports, proposition):
    result = reports["B2"].result(proposition)
    assert result.status is PropositionStatus.HOLDS
    assert result.refuted_count == 0


@pytest.mark.parametrize("proposition", LATTICE_LAWS)
@pytest.mark.parametrize("name", ["L2", "L3"])
def test_lattice_laws_skip_missing_negations_on_literal_spaces(reports, name, proposition):
    result = reports[name].result(proposition)
    assert result.refuted_count == 0
    assert result.skipped_count > 0
    assert set(result.skip_reasons) <= {MISSING_NEGATION, JOIN_UNDEFINED}


def test_same_seed_gives_identical_bytes(campaign):
    assert dumps(campaign_record(campaign)) == dumps(campaign_record(_run()))
