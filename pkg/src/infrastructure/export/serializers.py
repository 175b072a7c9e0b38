"""
Serializadores a registros JSON.

Cada función convierte un resultado de dominio en un diccionario listo para
json.dumps. Los puntos aparecen siempre por etiqueta, nunca por id, y los
arreglos conservan el orden determinista del dominio.
"""

import json
from typing import Any, Dict, List, Optional

from ...core.models import Point, Space, Subset, ValidationReport
from ...core.services.auditor import (
    AuditConfig,
    AuditReport,
    CampaignResult,
    Counterexample,
    PropositionResult,
)
from ...core.services.connectives import JoinResult, LubReport, NegationResult, TernaryVerdict, ZMode
from ...core.services.equivalence import QuotientSummary
from ...core.services.structure import BooleanDetectReport, ConditionCheck, MinimalInconsistentFamily
from ..config.constants import JSON_INDENT, SPACE_FILE_KEYS


def dumps(record: Any) -> str:
    """Texto JSON canónico: claves ordenadas, indentación fija y salto final."""
    return json.dumps(record, indent=JSON_INDENT, sort_keys=True, ensure_ascii=False) + "\n"


def _labels(space: Space, subset: Subset) -> List[str]:
    return space.labels_of(subset)


def _label(point: Optional[Point]) -> Optional[str]:
    return None if point is None else point.label


# =====================================================================
# Espacios
# =====================================================================

def space_document(space: Space) -> Dict[str, Any]:
    """Documento del formato de archivo de espacio."""
    document: Dict[str, Any] = {
        SPACE_FILE_KEYS["points"]: space.labels,
        SPACE_FILE_KEYS["maximal"]: [_labels(space, m) for m in space.maximal_consistent_sets()],
    }
    if space.origin:
        document[SPACE_FILE_KEYS["origin"]] = dict(space.origin)
    return document


def validation_record(space: Space, report: ValidationReport) -> Dict[str, Any]:
    violations = []
    for violation in report.violations:
        witness = violation.witness
        if isinstance(witness, Subset):
            witness_value: Any = _labels(space, witness)
        elif isinstance(witness, Point):
            witness_value = witness.label
        else:
            witness_value = None
        violations.append({
            "axiom": violation.kind.value,
            "witness": witness_value,
            "message": violation.message,
        })
    return {
        "ok": report.ok,
        "points": space.size,
        "maximal_count": len(space.maximal),
        "violations": violations,
    }


# =====================================================================
# Equivalencia
# =====================================================================

def classes_record(space: Space, summary: QuotientSummary) -> Dict[str, Any]:
    return {
        "max_size": summary.max_size,
        "class_count": summary.class_count,
        "subsets_examined": summary.subsets_examined,
        "consistent_subsets": summary.consistent_subsets,
        "classes": [
            {
                "representative": _labels(space, cls.representative),
                "class_size": cls.size,
                "consistent": cls.consistent,
                "signature": [_labels(space, m) for m in cls.signature.maximal],
            }
            for cls in summary.classes
        ],
    }


# =====================================================================
# Conectivas
# =====================================================================

def negation_record(space: Space, result: NegationResult) -> Dict[str, Any]:
    return {
        "input_set": _labels(space, result.input_set),
        "mode": result.mode.value,
        "candidates": [p.label for p in result.candidates],
        "representative": _label(result.representative),
        "all_equivalent": result.all_equivalent,
    }


def implies_record(space: Space, lhs: Subset, rhs: Subset, verdict: TernaryVerdict,
                   mode: ZMode) -> Dict[str, Any]:
    return {
        "lhs": _labels(space, lhs),
        "rhs": _labels(space, rhs),
        "mode": mode.value,
        "verdict": verdict.value.value,
        "reason": verdict.reason,
    }


def join_record(space: Space, result: JoinResult) -> Dict[str, Any]:
    negation = result.negation
    return {
        "x": result.x.label,
        "y": result.y.label,
        "mode": result.mode.value,
        "input_set": None if result.negated is None else _labels(space, result.negated),
        "candidates": [] if negation is None else [p.label for p in negation.candidates],
        "representative": _label(result.join),
        "all_equivalent": True if negation is None else negation.all_equivalent,
        "join": _label(result.join),
        "reason": result.reason,
    }


def meet_record(space: Space, lhs: Subset, rhs: Subset, result: Subset) -> Dict[str, Any]:
    return {
        "lhs": _labels(space, lhs),
        "rhs": _labels(space, rhs),
        "meet": _labels(space, result),
        "consistent": space.is_consistent(result),
    }


def lub_record(space: Space, report: LubReport) -> Dict[str, Any]:
    return {
        "x": report.x.label,
        "y": report.y.label,
        "mode": report.mode.value,
        "join": _label(report.join),
        "meet": _labels(space, report.meet),
        "passed": report.passed,
        "skipped": report.skipped,
        "entries": [
            {
                "t": entry.t.label,
                "upper": entry.upper.value,
                "upper_reason": entry.upper_reason,
                "lower": entry.lower.value,
                "lower_reason": entry.lower_reason,
            }
            for entry in report.entries
        ],
    }


# =====================================================================
# Estructura
# =====================================================================

def minimal_inconsistent_record(space: Space, family: MinimalInconsistentFamily) -> Dict[str, Any]:
    return {
        "sets": [_labels(space, s) for s in family.sets],
        "complete": family.complete,
        "max_size_searched": family.max_size_searched,
    }


def _condition_record(space: Space, check: ConditionCheck) -> Dict[str, Any]:
    return {
        "name": check.name,
        "passed": check.passed,
        "vacuous": check.vacuous,
        "witness": [_labels(space, s) for s in check.witness],
        "message": check.message,
    }


def detect_boolean_record(space: Space, report: BooleanDetectReport) -> Dict[str, Any]:
    return {
        "is_boolean": report.is_boolean,
        "conditions": [_condition_record(space, check) for check in report.checks],
        "pairing": dict(report.pairing),
        "exactness_reading": report.exactness_reading,
    }


# =====================================================================
# Auditoría
# =====================================================================

def _counterexample_record(counterexample: Optional[Counterexample]) -> Optional[Dict[str, Any]]:
    if counterexample is None:
        return None
    return {
        "bindings": {name: list(labels) for name, labels in counterexample.bindings.items()},
        "witnesses": {name: list(labels) for name, labels in counterexample.witnesses.items()},
        "message": counterexample.message,
    }


def _result_record(result: PropositionResult) -> Dict[str, Any]:
    return {
        "proposition": result.proposition.value,
        "status": result.status.value,
        "total_instances": result.total_instances,
        "instances_checked": result.instances_checked,
        "vacuous_count": result.vacuous_count,
        "refuted_count": result.refuted_count,
        "skipped_count": result.skipped_count,
        "skip_reasons": dict(result.skip_reasons),
        "counterexample": _counterexample_record(result.counterexample),
    }


def audit_config_record(config: AuditConfig) -> Dict[str, Any]:
    return {
        "mode": config.mode.value,
        "cap": config.cap,
        "full_domain_max_points": config.full_domain_max_points,
        "bounded_set_size": config.bounded_set_size,
        "seed": config.seed,
    }


def audit_record(report: AuditReport) -> Dict[str, Any]:
    domain = report.set_domain
    return {
        "space": dict(report.space),
        "config": audit_config_record(report.config),
        "set_domain": None if domain is None else {
            "kind": domain.kind,
            "max_size": domain.max_size,
            "includes_maximal": domain.includes_maximal,
            "size": domain.size,
        },
        "results": [_result_record(r) for r in report.results],
        "mode_cross_checked": report.mode_cross_checked,
        "mode_divergences": [
            {"point": d.point, "elements": list(d.elements), "subsets": list(d.subsets)}
            for d in report.mode_divergences
        ],
    }


def campaign_record(result: CampaignResult) -> Dict[str, Any]:
    config = result.config
    summary = []
    for item in result.summary:
        first = None
        if item.first_counterexample is not None:
            name, counterexample = item.first_counterexample
            first = {"space": name, "counterexample": _counterexample_record(counterexample)}
        summary.append({
            "proposition": item.proposition.value,
            "holds": item.holds,
            "refuted": item.refuted,
            "skipped": item.skipped,
            "instances_checked": item.instances_checked,
            "first_counterexample": first,
        })
    return {
        "config": {
            "literal_vars": list(config.literal_vars),
            "boolean_vars": list(config.boolean_vars),
            "random_seeds": config.random_seeds,
            "random_points": list(config.random_points),
            "random_maximal": config.random_maximal,
            "base_seed": config.base_seed,
            "propositions": None if config.propositions is None
            else [p.value for p in config.propositions],
        },
        "audit_config": audit_config_record(result.audit_config),
        "entries": [
            {
                "name": entry.name,
                "error": entry.error,
                "report": None if entry.report is None else audit_record(entry.report),
            }
            for entry in result.entries
        ],
        "summary": summary,
    }
