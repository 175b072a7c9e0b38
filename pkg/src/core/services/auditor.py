"""
Servicio de auditoría - Dominio puro.

Comprueba cada proposición del registro sobre espacios concretos y reporta
holds / refuted (con contraejemplo reproducible) / skipped, de forma
determinista.

Las variables de conjunto se comprimen por clase de firma: dos conjuntos con
la misma firma son intercambiables en toda comprobación, de modo que basta
evaluar un representante (el menor en orden canónico) y ponderar el
resultado por el tamaño de la clase. Los recuentos siguen siendo exactos.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ...shared.exceptions import CSpaceError
from ...shared.utils import canonical_key, masks_by_size
from ..models.space import Space
from ..rules.propositions import PROPOSITION_REGISTRY, PropositionId, PropositionSpec, VariableKind
from .builders import BuilderConfig, BuilderKind, SpaceBuilder
from .connectives import ConnectiveEngine, ZMode
from .equivalence import EquivalenceAnalyzer
from .structure import StructureAnalyzer

logger = logging.getLogger(__name__)

# Motivos de omisión
MISSING_NEGATION = "missing_negation"
JOIN_UNDEFINED = "join_undefined"
COLLAPSED_INSTANCE = "collapsed_instance"
NON_ALGEBRAIC = "non_algebraic"


class InstanceKind(Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    REFUTED = "refuted"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Outcome:
    """Resultado de una instanciación concreta."""
    kind: InstanceKind
    reason: str = ""
    message: str = ""
    witnesses: Tuple[Tuple[str, int], ...] = ()


HOLDS = Outcome(InstanceKind.HOLDS)
VACUOUS = Outcome(InstanceKind.VACUOUS)


def skipped(reason: str) -> Outcome:
    return Outcome(InstanceKind.SKIPPED, reason)


def refuted(message: str, **witnesses: int) -> Outcome:
    return Outcome(InstanceKind.REFUTED, message=message, witnesses=tuple(sorted(witnesses.items())))


class PropositionStatus(Enum):
    HOLDS = "holds"
    REFUTED = "refuted"
    SKIPPED = "skipped"


@dataclass
class Counterexample:
    """Asignación de variables que viola la proposición, más los testigos usados."""
    bindings: Dict[str, List[str]]
    witnesses: Dict[str, List[str]]
    message: str


@dataclass
class PropositionResult:
    """Resultado agregado de una proposición sobre un espacio."""
    proposition: PropositionId
    status: PropositionStatus = PropositionStatus.SKIPPED
    total_instances: int = 0
    instances_checked: int = 0
    vacuous_count: int = 0
    refuted_count: int = 0
    skipped_count: int = 0
    skip_reasons: Dict[str, int] = field(default_factory=dict)
    counterexample: Optional[Counterexample] = None


@dataclass(frozen=True)
class SetDomain:
    """Dominio efectivo de las variables de conjunto."""
    kind: str                 # "all_subsets" o "bounded"
    max_size: int
    includes_maximal: bool
    size: int


@dataclass
class AuditConfig:
    """Parámetros de una auditoría."""
    mode: ZMode = ZMode.SUBSETS
    cap: int = 20
    full_domain_max_points: int = 6
    bounded_set_size: int = 3
    seed: Optional[int] = None

    @classmethod
    def from_settings(cls, mode: "ZMode | str | None" = None, seed: Optional[int] = None,
                      cap: Optional[int] = None) -> "AuditConfig":
        """Configuración por defecto a partir de Settings."""
        from ...infrastructure.config.settings import settings
        audit = settings.get_audit_config()
        return cls(
            mode=ZMode.parse(mode if mode is not None else audit["default_z_mode"]),
            cap=settings.max_points if cap is None else cap,
            full_domain_max_points=audit["full_domain_max_points"],
            bounded_set_size=audit["bounded_set_size"],
            seed=seed,
        )


@dataclass(frozen=True)
class ModeDivergence:
    """Punto cuyas negaciones difieren entre los dos rangos de z."""
    point: str
    elements: Tuple[str, ...]
    subsets: Tuple[str, ...]


@dataclass
class AuditReport:
    """Reporte de auditoría de un espacio."""
    space: Dict[str, Any]
    config: AuditConfig
    set_domain: Optional[SetDomain]
    results: List[PropositionResult] = field(default_factory=list)
    mode_divergences: List[ModeDivergence] = field(default_factory=list)
    mode_cross_checked: bool = False

    def result(self, proposition: PropositionId) -> PropositionResult:
        for result in self.results:
            if result.proposition is proposition:
                return result
        raise KeyError(proposition.value)

    @property
    def refuted(self) -> List[PropositionId]:
        return [r.proposition for r in self.results if r.status is PropositionStatus.REFUTED]


class SpaceAuditor:
    """
    Auditor de un espacio.

    Attributes:
        space: Espacio auditado
        config: Parámetros de la auditoría
        name: Nombre del espacio en el reporte
    """

    def __init__(self, space: Space, config: Optional[AuditConfig] = None, name: Optional[str] = None):
        self.space = space
        self.config = config or AuditConfig.from_settings()
        self.name = name or space.origin.get("kind", "explicit")
        self._engine: Optional[ConnectiveEngine] = None
        self._equivalence = EquivalenceAnalyzer(space, self.config.cap)
        self._set_classes: Optional[List[Tuple[int, int]]] = None
        self._checks: Dict[PropositionId, Callable[..., Outcome]] = {
            PropositionId.P01: self._check_p01,
            PropositionId.P02: self._check_p02,
            PropositionId.P03: self._check_p03,
            PropositionId.P04: self._check_p04,
            PropositionId.P05: self._check_p05,
            PropositionId.P06: self._check_p06,
            PropositionId.P07: self._check_p07,
            PropositionId.P08: self._check_p08,
            PropositionId.P09: self._check_p09,
            PropositionId.P10: self._check_p10,
            PropositionId.P11: self._check_p11,
            PropositionId.P12: self._check_p12,
            PropositionId.P13: self._check_p13,
            PropositionId.P14: self._check_p14,
            PropositionId.P15: self._check_p15,
            PropositionId.P16: self._check_p16,
        }

    # =====================================================================
    # Punto de entrada
    # =====================================================================

    def audit(self, propositions: Optional[Iterable[PropositionId]] = None) -> AuditReport:
        """
        Audita las proposiciones pedidas (todas por defecto) en orden de id.

        Raises:
            CapExceededError: Nombrando la primera proposición que excede el límite
        """
        selected = sorted(set(propositions or PropositionId), key=lambda p: p.value)
        for proposition in selected:
            if self._needs_cap(PROPOSITION_REGISTRY[proposition]):
                self.space.require_within_cap("audit_space", self.config.cap, proposition.value)

        needs_sets = any(PROPOSITION_REGISTRY[p].quantifies_sets for p in selected)
        report = AuditReport(
            space=self.descriptor(),
            config=self.config,
            set_domain=self.set_domain() if needs_sets else None,
        )
        for proposition in selected:
            result = self._run(PROPOSITION_REGISTRY[proposition])
            logger.debug("%s en %s: %s (%d verificadas, %d omitidas)", proposition.value, self.name,
                         result.status, result.instances_checked, result.skipped_count)
            report.results.append(result)

        if self.space.size <= self.config.cap:
            report.mode_divergences = self.mode_divergences()
            report.mode_cross_checked = True
        return report

    def descriptor(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "origin": self.space.origin,
            "points": self.space.labels,
            "maximal_count": len(self.space.maximal),
        }

    def _needs_cap(self, spec: PropositionSpec) -> bool:
        if spec.id is PropositionId.P01:
            return False
        return (spec.id is PropositionId.P03 or spec.quantifies_sets
                or self.config.mode is ZMode.SUBSETS)

    @property
    def engine(self) -> ConnectiveEngine:
        if self._engine is None:
            self._engine = ConnectiveEngine(self.space, self.config.mode, self.config.cap)
        return self._engine

    # =====================================================================
    # Dominios
    # =====================================================================

    def set_domain(self) -> SetDomain:
        size = self.space.size
        if size <= self.config.full_domain_max_points:
            return SetDomain("all_subsets", size, False, 1 << size)
        return SetDomain("bounded", self.config.bounded_set_size, True, len(self._set_masks()))

    def _set_masks(self) -> List[int]:
        size = self.space.size
        if size <= self.config.full_domain_max_points:
            return list(masks_by_size(size))
        masks = set(masks_by_size(size, self.config.bounded_set_size))
        masks.update(self.space.maximal_bits)
        return sorted(masks, key=canonical_key)

    def set_classes(self) -> List[Tuple[int, int]]:
        """(representante, multiplicidad) por clase de firma, en orden canónico."""
        if self._set_classes is None:
            representatives: Dict[int, int] = {}
            counts: Dict[int, int] = {}
            for mask in self._set_masks():
                signature = self.space.signature_bits(mask)
                representatives.setdefault(signature, mask)
                counts[signature] = counts.get(signature, 0) + 1
            self._set_classes = sorted(
                ((rep, counts[sig]) for sig, rep in representatives.items()),
                key=lambda item: canonical_key(item[0]),
            )
        return self._set_classes

    def _domain(self, kind: VariableKind) -> List[Tuple[int, int]]:
        if kind is VariableKind.SET:
            return self.set_classes()
        return [(p, 1) for p in range(self.space.size)]

    # =====================================================================
    # Ejecución genérica
    # =====================================================================

    def _run(self, spec: PropositionSpec) -> PropositionResult:
        check = self._checks[spec.id]
        domains = [self._domain(kind) for _, kind in spec.variables]
        result = PropositionResult(spec.id)
        total = 1
        for domain in domains:
            total *= sum(count for _, count in domain)
        result.total_instances = total

        best_key = None
        best: Optional[Tuple[Tuple[int, ...], Outcome]] = None
        for combo in product(*domains):
            weight = 1
            for _, count in combo:
                weight *= count
            values = tuple(value for value, _ in combo)
            outcome = check(*values)
            if outcome.kind is InstanceKind.SKIPPED:
                result.skipped_count += weight
                result.skip_reasons[outcome.reason] = result.skip_reasons.get(outcome.reason, 0) + weight
                continue
            result.instances_checked += weight
            if outcome.kind is InstanceKind.VACUOUS:
                result.vacuous_count += weight
            elif outcome.kind is InstanceKind.REFUTED:
                result.refuted_count += weight
                key = self._instance_key(spec, values)
                if best_key is None or key < best_key:
                    best_key, best = key, (values, outcome)

        if result.refuted_count:
            result.status = PropositionStatus.REFUTED
            result.counterexample = self._counterexample(spec, *best)
        elif result.instances_checked:
            result.status = PropositionStatus.HOLDS
        else:
            result.status = PropositionStatus.SKIPPED
        return result

    def _instance_key(self, spec: PropositionSpec, values: Sequence[int]):
        """Orden de minimalidad: tamaño total ligado, luego lexicográfico por variable."""
        keys = []
        total = 0
        for (_, kind), value in zip(spec.variables, values):
            key = canonical_key(value) if kind is VariableKind.SET else (1, (value,))
            total += key[0]
            keys.append(key)
        return (total, tuple(keys))

    def _counterexample(self, spec: PropositionSpec, values: Sequence[int], outcome: Outcome) -> Counterexample:
        labels = self.space.labels_of
        bindings = {
            name: labels(value) if kind is VariableKind.SET else [self.space.points[value].label]
            for (name, kind), value in zip(spec.variables, values)
        }
        witnesses = {name: labels(mask) for name, mask in outcome.witnesses}
        return Counterexample(bindings, witnesses, outcome.message)

    # =====================================================================
    # Primitivas
    # =====================================================================

    def _consistent(self, bits: int) -> bool:
        return self.space.signature_bits(bits) != 0

    def _equivalent(self, a: int, b: int) -> bool:
        return self.space.signature_bits(a) == self.space.signature_bits(b)

    def _neg(self, bits: int) -> Optional[int]:
        return self.engine.representative_negation(bits)

    def _implies(self, a: int, b: int) -> Optional[bool]:
        return self.engine.implies_bits(a, b)

    # =====================================================================
    # Comprobaciones
    # =====================================================================

    def _check_p01(self) -> Outcome:
        if self._consistent(0):
            return HOLDS
        return refuted("∅ ∉ ℘")

    def _check_p02(self, chi: int, gamma: int, kappa: int) -> Outcome:
        if not self._equivalent(chi, gamma):
            return VACUOUS
        if self._equivalent(chi | kappa, gamma | kappa):
            return HOLDS
        eta = self._equivalence.distinguishing_kappa_bits(chi | kappa, gamma | kappa)
        return refuted("χ ∪ κ y γ ∪ κ no son equivalentes", eta=eta)

    def _check_p03(self) -> Outcome:
        if not self.space.is_algebraic:
            return skipped(NON_ALGEBRAIC)
        report = StructureAnalyzer(self.space, self.config.cap).detect_boolean()
        failures = [check for check in report.checks if not check.passed]
        if not failures:
            return HOLDS
        witnesses = {
            f"{check.name}_{i + 1}": subset.bits
            for check in failures
            for i, subset in enumerate(check.witness)
        }
        names = ", ".join(f"'{check.name}'" for check in failures)
        return refuted(f"Fallan las condiciones {names}: {failures[0].message}", **witnesses)

    def _check_p04(self, x: int) -> Outcome:
        candidates = self.engine.negation_ids(1 << x)
        if not candidates:
            return skipped(MISSING_NEGATION)
        first = candidates[0]
        for other in candidates[1:]:
            if not self._equivalent(1 << first, 1 << other):
                return refuted("Dos negaciones no equivalentes", negation_1=1 << first, negation_2=1 << other)
        return HOLDS

    def _check_p05(self, x: int) -> Outcome:
        x_neg = self._neg(1 << x)
        if x_neg is None:
            return skipped(MISSING_NEGATION)
        x_neg_neg = self._neg(1 << x_neg)
        if x_neg_neg is None:
            return skipped(MISSING_NEGATION)
        if self._equivalent(1 << x_neg_neg, 1 << x):
            return HOLDS
        return refuted("¬¬x no es equivalente a x", negation=1 << x_neg, double_negation=1 << x_neg_neg)

    def _check_p06(self, x: int, y: int) -> Outcome:
        y_neg = self._neg(1 << y)
        if y_neg is None:
            return skipped(MISSING_NEGATION)
        triple = (1 << x) | (1 << y) | (1 << y_neg)
        if not self._consistent(triple):
            return HOLDS
        return refuted("{x, y, ȳ} es consistente", negation_of_y=1 << y_neg)

    def _check_p07(self, x: int, y: int) -> Outcome:
        candidates = self.engine.negation_ids(1 << y)
        if not candidates:
            return skipped(MISSING_NEGATION)
        if x == y or x in candidates:
            return skipped(COLLAPSED_INSTANCE)
        y_neg = candidates[0]
        triple = (1 << x) | (1 << y) | (1 << y_neg)
        if self._equivalent(triple, 1 << x):
            return HOLDS
        kappa = self._equivalence.distinguishing_kappa_bits(triple, 1 << x)
        return refuted("{x, y, ȳ} no es equivalente a {x}", negation_of_y=1 << y_neg, kappa=kappa)

    def _check_p08(self, x: int, y: int) -> Outcome:
        x_neg, y_neg = self._neg(1 << x), self._neg(1 << y)
        if x_neg is None or y_neg is None:
            return skipped(MISSING_NEGATION)
        if self._equivalent(1 << x, 1 << y) == self._equivalent(1 << x_neg, 1 << y_neg):
            return HOLDS
        return refuted("x ~ y y x̄ ~ ȳ difieren", negation_of_x=1 << x_neg, negation_of_y=1 << y_neg)

    def _check_p09(self, x: int) -> Outcome:
        verdict = self._implies(1 << x, 1 << x)
        if verdict is None:
            return skipped(MISSING_NEGATION)
        return HOLDS if verdict else refuted("x no implica x", negation_of_x=1 << self._neg(1 << x))

    def _check_p10(self, x: int, y: int) -> Outcome:
        forward, backward = self._implies(1 << x, 1 << y), self._implies(1 << y, 1 << x)
        if forward is None or backward is None:
            return skipped(MISSING_NEGATION)
        if not (forward and backward):
            return VACUOUS
        if self._equivalent(1 << x, 1 << y):
            return HOLDS
        return refuted("x → y e y → x pero x ≁ y",
                       kappa=self._equivalence.distinguishing_kappa_bits(1 << x, 1 << y))

    def _check_p11(self, x: int, y: int) -> Outcome:
        forward, backward = self._implies(1 << x, 1 << y), self._implies(1 << y, 1 << x)
        if forward is None or backward is None:
            return skipped(MISSING_NEGATION)
        if not self._equivalent(1 << x, 1 << y):
            return VACUOUS
        if forward and backward:
            return HOLDS
        return refuted("x ~ y pero falta alguna flecha")

    def _check_p12(self, x: int, y: int, z: int) -> Outcome:
        x_y, y_z, x_z = (self._implies(1 << x, 1 << y), self._implies(1 << y, 1 << z),
                         self._implies(1 << x, 1 << z))
        if x_y is None or y_z is None or x_z is None:
            return skipped(MISSING_NEGATION)
        if not (x_y and y_z):
            return VACUOUS
        return HOLDS if x_z else refuted("x → y, y → z pero no x → z", negation_of_z=1 << self._neg(1 << z))

    def _check_p13(self, t: int, x: int, y: int) -> Outcome:
        t_x, t_y = self._implies(1 << t, 1 << x), self._implies(1 << t, 1 << y)
        t_xy = self._implies(1 << t, (1 << x) | (1 << y))
        if t_x is None or t_y is None or t_xy is None:
            return skipped(MISSING_NEGATION)
        if not (t_x and t_y):
            return VACUOUS
        if t_xy:
            return HOLDS
        return refuted("t → x, t → y pero no t → {x, y}",
                       negation_of_xy=1 << self._neg((1 << x) | (1 << y)))

    def _check_p14(self, x: int, y: int, t: int) -> Outcome:
        joined = self.engine.join_id(x, y)
        if joined is None:
            return skipped(JOIN_UNDEFINED)
        x_j, y_j = self._implies(1 << x, 1 << joined), self._implies(1 << y, 1 << joined)
        x_t, y_t = self._implies(1 << x, 1 << t), self._implies(1 << y, 1 << t)
        j_t = self._implies(1 << joined, 1 << t)
        if None in (x_j, y_j, x_t, y_t, j_t):
            return skipped(MISSING_NEGATION)
        if not (x_j and y_j):
            return refuted("x ∨ y no es cota superior de x e y", join=1 << joined)
        if not (x_t and y_t):
            return VACUOUS
        return HOLDS if j_t else refuted("x → t, y → t pero no x ∨ y → t", join=1 << joined)

    def _check_p15(self, x: int, y: int) -> Outcome:
        x_neg, y_neg = self._neg(1 << x), self._neg(1 << y)
        if x_neg is None or y_neg is None:
            return skipped(MISSING_NEGATION)
        forward = self._implies(1 << x, 1 << y)
        backward = self._implies(1 << y_neg, 1 << x_neg)
        if backward is None:
            return skipped(MISSING_NEGATION)
        if forward == backward:
            return HOLDS
        return refuted("x → y y ȳ → x̄ difieren", negation_of_x=1 << x_neg, negation_of_y=1 << y_neg)

    def _check_p16(self, t: int, x: int, y: int) -> Outcome:
        x_y = self._implies(1 << x, 1 << y)
        shifted = self._implies((1 << t) | (1 << x), (1 << t) | (1 << y))
        if x_y is None or shifted is None:
            return skipped(MISSING_NEGATION)
        if not x_y:
            return VACUOUS
        if shifted:
            return HOLDS
        return refuted("x → y pero no {t, x} → {t, y}",
                       negation_of_ty=1 << self._neg((1 << t) | (1 << y)))

    # =====================================================================
    # Contraste de modos
    # =====================================================================

    def mode_divergences(self) -> List[ModeDivergence]:
        """Puntos cuyos candidatos a negación difieren entre los modos elements y subsets."""
        by_mode = {
            mode: ConnectiveEngine(self.space, mode, self.config.cap)
            for mode in (ZMode.ELEMENTS, ZMode.SUBSETS)
        }
        if self._engine is not None:
            by_mode[self._engine.mode] = self._engine
        divergences = []
        for point in self.space.points:
            elements = by_mode[ZMode.ELEMENTS].negation_ids(1 << point.id)
            subsets = by_mode[ZMode.SUBSETS].negation_ids(1 << point.id)
            if elements != subsets:
                divergences.append(ModeDivergence(
                    point.label,
                    tuple(self.space.points[i].label for i in elements),
                    tuple(self.space.points[i].label for i in subsets),
                ))
        if divergences:
            logger.info("%s: %d puntos con negaciones distintas según el modo", self.name, len(divergences))
        return divergences


def audit_space(space: Space, propositions: Optional[Iterable[PropositionId]] = None,
                mode: "ZMode | str | None" = None, config: Optional[AuditConfig] = None,
                name: Optional[str] = None) -> AuditReport:
    """Audita un espacio con la configuración dada (o la de Settings con el modo pedido)."""
    if config is None:
        config = AuditConfig.from_settings(mode)
    elif mode is not None:
        config = replace(config, mode=ZMode.parse(mode))
    return SpaceAuditor(space, config, name).audit(propositions)


# =====================================================================
# Campañas
# =====================================================================

@dataclass(frozen=True)
class CampaignMember:
    name: str
    config: BuilderConfig


@dataclass
class CampaignConfig:
    """Corpus de una campaña: constructores con nombre más espacios aleatorios."""
    literal_vars: List[int] = field(default_factory=lambda: [1, 2, 3])
    boolean_vars: List[int] = field(default_factory=lambda: [1, 2])
    random_seeds: int = 50
    random_points: List[int] = field(default_factory=lambda: [4, 5, 6])
    random_maximal: int = 3
    base_seed: int = 0
    workers: int = 1
    propositions: Optional[List[PropositionId]] = None

    @classmethod
    def from_settings(cls, base_seed: int = 0, workers: Optional[int] = None,
                      propositions: Optional[List[PropositionId]] = None) -> "CampaignConfig":
        from ...infrastructure.config.settings import settings
        campaign = settings.get_campaign_config()
        return cls(
            literal_vars=list(campaign["literal_vars"]),
            boolean_vars=list(campaign["boolean_vars"]),
            random_seeds=campaign["random_seeds"],
            random_points=list(campaign["random_points"]),
            random_maximal=campaign["random_maximal"],
            base_seed=base_seed,
            workers=settings.get_audit_config()["workers"] if workers is None else workers,
            propositions=propositions,
        )

    def members(self) -> List[CampaignMember]:
        members = [CampaignMember(f"L{n}", BuilderConfig(BuilderKind.LITERAL, n_vars=n))
                   for n in self.literal_vars]
        members += [CampaignMember(f"B{n}", BuilderConfig(BuilderKind.BOOLEAN, n_vars=n))
                    for n in self.boolean_vars]
        for seed in range(self.base_seed, self.base_seed + self.random_seeds):
            points = self.random_points[seed % len(self.random_points)]
            members.append(CampaignMember(
                f"R{seed}-{points}p",
                BuilderConfig(BuilderKind.RANDOM, num_points=points,
                              num_maximal=self.random_maximal, seed=seed),
            ))
        return members


@dataclass
class CampaignEntry:
    name: str
    report: Optional[AuditReport] = None
    error: Optional[str] = None


@dataclass
class PropositionSummary:
    """Agregado de una proposición sobre todo el corpus."""
    proposition: PropositionId
    holds: int = 0
    refuted: int = 0
    skipped: int = 0
    instances_checked: int = 0
    first_counterexample: Optional[Tuple[str, Counterexample]] = None


@dataclass
class CampaignResult:
    entries: List[CampaignEntry]
    summary: List[PropositionSummary]
    config: CampaignConfig
    audit_config: AuditConfig

    @property
    def errors(self) -> List[CampaignEntry]:
        return [entry for entry in self.entries if entry.error is not None]


class AuditCampaign:
    """Ejecuta audit_space sobre cada miembro del corpus."""

    def __init__(self, config: CampaignConfig, audit_config: Optional[AuditConfig] = None,
                 builder: Optional[SpaceBuilder] = None):
        self.config = config
        self.audit_config = audit_config or AuditConfig.from_settings(seed=config.base_seed)
        self.builder = builder or SpaceBuilder()

    def _run_member(self, member: CampaignMember) -> CampaignEntry:
        try:
            space = self.builder.build(member.config)
            report = SpaceAuditor(space, self.audit_config, member.name).audit(self.config.propositions)
            return CampaignEntry(member.name, report=report)
        except CSpaceError as e:
            logger.warning("Miembro %s de la campaña falló: %s", member.name, e)
            return CampaignEntry(member.name, error=str(e))

    def run(self) -> CampaignResult:
        members = self.config.members()
        logger.info("Campaña de %d espacios con %d workers", len(members), self.config.workers)
        if self.config.workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
                entries = list(executor.map(self._run_member, members))
        else:
            entries = [self._run_member(member) for member in members]
        return CampaignResult(entries, summarize(entries, self.config.propositions),
                              self.config, self.audit_config)


def summarize(entries: Sequence[CampaignEntry],
              propositions: Optional[Iterable[PropositionId]] = None) -> List[PropositionSummary]:
    """Agrega los resultados por proposición en orden de corpus."""
    selected = sorted(set(propositions or PropositionId), key=lambda p: p.value)
    summaries = {p: PropositionSummary(p) for p in selected}
    for entry in entries:
        if entry.report is None:
            continue
        for result in entry.report.results:
            summary = summaries[result.proposition]
            summary.instances_checked += result.instances_checked
            if result.status is PropositionStatus.HOLDS:
                summary.holds += 1
            elif result.status is PropositionStatus.REFUTED:
                summary.refuted += 1
                if summary.first_counterexample is None:
                    summary.first_counterexample = (entry.name, result.counterexample)
            else:
                summary.skipped += 1
    return [summaries[p] for p in selected]


def audit_campaign(config: Optional[CampaignConfig] = None,
                   audit_config: Optional[AuditConfig] = None) -> CampaignResult:
    return AuditCampaign(config or CampaignConfig.from_settings(), audit_config).run()
