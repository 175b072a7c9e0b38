"""
Servicio de conectivas - Dominio puro.

Recupera negación, implicación, unión (join) e intersección (meet) a partir
de la estructura de consistencia.

Las tres condiciones de negación solo dependen de z a través de su firma, de
modo que el motor trabaja sobre firmas:

    (1) firma(a) ∩ firma(y) = ∅
    (2) para todo z: firma(a) ∩ firma(z) = ∅  =>  firma(z) ⊆ firma(y)
    (3) para todo z: firma(y) ∩ firma(z) = ∅  =>  firma(z) ⊆ firma(a)

En modo "elements" z recorre los singletons; en modo "subsets" recorre las
firmas alcanzables por algún subconjunto, que es exactamente el rango que
producen todos los z ⊆ X. is_negation_bruteforce conserva la transcripción
literal como oráculo de referencia.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ...shared.exceptions import InvalidArgumentError, InvariantViolationError
from ..models.space import Point, Space, Subset
from .equivalence import EquivalenceAnalyzer, achievable_signatures

logger = logging.getLogger(__name__)


class ZMode(Enum):
    """Rango de la variable z en las condiciones de negación."""
    ELEMENTS = "elements"
    SUBSETS = "subsets"

    @classmethod
    def parse(cls, value: "str | ZMode") -> "ZMode":
        if isinstance(value, ZMode):
            return value
        try:
            return cls(value)
        except ValueError:
            raise InvalidArgumentError(
                f"Modo z desconocido: {value!r} (use 'elements' o 'subsets')"
            ) from None


@dataclass(frozen=True)
class NegationResult:
    """
    Candidatos a negación de un conjunto.

    Attributes:
        input_set: Conjunto negado
        candidates: Puntos que cumplen las tres condiciones, en orden de id
        all_equivalent: Si todos los candidatos son ~-equivalentes como singletons
        representative: Candidato de menor id (None si no hay)
        mode: Rango de z usado
    """
    input_set: Subset
    candidates: Tuple[Point, ...]
    all_equivalent: bool
    representative: Optional[Point]
    mode: ZMode

    @property
    def exists(self) -> bool:
        return self.representative is not None


class Verdict(Enum):
    TRUE = "true"
    FALSE = "false"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class TernaryVerdict:
    """Veredicto de una implicación; indefinido cuando falta una negación."""
    value: Verdict
    reason: str = ""

    @classmethod
    def of(cls, flag: bool) -> "TernaryVerdict":
        return cls(Verdict.TRUE if flag else Verdict.FALSE)

    @classmethod
    def undefined(cls, reason: str) -> "TernaryVerdict":
        return cls(Verdict.UNDEFINED, reason)

    @property
    def is_true(self) -> bool:
        return self.value is Verdict.TRUE

    @property
    def is_false(self) -> bool:
        return self.value is Verdict.FALSE

    @property
    def is_defined(self) -> bool:
        return self.value is not Verdict.UNDEFINED


class BoundStatus(Enum):
    HOLDS = "holds"
    VACUOUS = "vacuous"
    REFUTED = "refuted"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class LubEntry:
    """Veredictos de ambas direcciones para un punto t."""
    t: Point
    upper: BoundStatus
    lower: BoundStatus
    upper_reason: str = ""
    lower_reason: str = ""


@dataclass
class LubReport:
    """Comprobación de cota superior mínima y de introducción del meet para (x, y)."""
    x: Point
    y: Point
    join: Optional[Point]
    meet: Subset
    mode: ZMode
    entries: List[LubEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(
            BoundStatus.REFUTED in (entry.upper, entry.lower) for entry in self.entries
        )

    @property
    def skipped(self) -> int:
        return sum(
            (entry.upper is BoundStatus.SKIPPED) + (entry.lower is BoundStatus.SKIPPED)
            for entry in self.entries
        )


@dataclass(frozen=True)
class JoinResult:
    """
    Búsqueda de x ∨ y como negación de {x̄, ȳ}.

    Attributes:
        negated: El conjunto {x̄, ȳ}, o None si x o y no tienen negación
        negation: Candidatos a negación de negated
        join: Representante de la negación (None si no existe)
        reason: Motivo cuando join es None
    """
    x: Point
    y: Point
    negated: Optional[Subset]
    negation: Optional[NegationResult]
    join: Optional[Point]
    mode: ZMode = ZMode.SUBSETS
    reason: str = ""


class ConnectiveEngine:
    """
    Motor de conectivas ligado a un espacio y a un modo de z.

    Los candidatos a negación se memorizan por firma del conjunto negado:
    dos conjuntos con la misma firma tienen exactamente los mismos candidatos.
    """

    def __init__(self, space: Space, mode: "ZMode | str" = ZMode.SUBSETS, cap: Optional[int] = None):
        if cap is None:
            from ...infrastructure.config.settings import get_max_points
            cap = get_max_points()
        self.space = space
        self.mode = ZMode.parse(mode)
        self.cap = cap
        if self.mode is ZMode.SUBSETS:
            space.require_within_cap("negation search (subsets mode)", cap)
            self._z_signatures: Tuple[int, ...] = tuple(achievable_signatures(space))
        else:
            self._z_signatures = tuple(sorted(set(space.point_signatures)))
        self._negations: Dict[int, Tuple[int, ...]] = {}
        self._equivalence = EquivalenceAnalyzer(space, cap)
        logger.debug("Motor de conectivas para %r en modo %s: %d firmas de z",
                     space, self.mode.value, len(self._z_signatures))

    # =====================================================================
    # Negación
    # =====================================================================

    def _satisfies(self, sig_a: int, point_id: int) -> bool:
        sig_y = self.space.point_signatures[point_id]
        if sig_a & sig_y:
            return False
        for sig_z in self._z_signatures:
            if not sig_a & sig_z and sig_y & sig_z != sig_z:
                return False
            if not sig_y & sig_z and sig_a & sig_z != sig_z:
                return False
        return True

    def negation_ids(self, bits: int) -> Tuple[int, ...]:
        """Ids de los candidatos a negación del conjunto con máscara `bits`."""
        sig_a = self.space.signature_bits(bits)
        cached = self._negations.get(sig_a)
        if cached is None:
            cached = tuple(p for p in range(self.space.size) if self._satisfies(sig_a, p))
            self._negations[sig_a] = cached
        return cached

    def representative_negation(self, bits: int) -> Optional[int]:
        """Id del candidato de menor id, o None si no hay negación."""
        candidates = self.negation_ids(bits)
        return candidates[0] if candidates else None

    def is_negation(self, a: Subset, y: Point) -> bool:
        self.space.check_width(a)
        return self._satisfies(self.space.signature_bits(a.bits), y.id)

    def find_negations(self, a: Subset) -> NegationResult:
        """Recorre todos los puntos y devuelve los candidatos en orden de id."""
        self.space.check_width(a)
        ids = self.negation_ids(a.bits)
        signatures = {self.space.point_signatures[i] for i in ids}
        return NegationResult(
            input_set=a,
            candidates=tuple(self.space.points[i] for i in ids),
            all_equivalent=len(signatures) <= 1,
            representative=self.space.points[ids[0]] if ids else None,
            mode=self.mode,
        )

    def is_negation_bruteforce(self, a: Subset, y: Point) -> bool:
        """
        Transcripción literal de las tres condiciones con el oráculo de fuerza bruta.

        Raises:
            CapExceededError: Si |X| supera el límite exhaustivo
        """
        space = self.space
        space.check_width(a)
        space.require_within_cap("is_negation_bruteforce", self.cap)
        consistent = space.is_consistent_bits
        equivalent = self._equivalence._equivalent_bruteforce_bits
        y_bits = 1 << y.id
        if consistent(a.bits | y_bits):
            return False
        if self.mode is ZMode.ELEMENTS:
            z_range: Sequence[int] = [1 << p for p in range(space.size)]
        else:
            z_range = range(1 << space.size)
        for z in z_range:
            if not consistent(a.bits | z) and not equivalent(y_bits | z, z):
                return False
            if not consistent(y_bits | z) and not equivalent(a.bits | z, z):
                return False
        return True

    # =====================================================================
    # Implicación, join y meet
    # =====================================================================

    def implies_bits(self, a: int, b: int) -> Optional[bool]:
        """
        a → b sobre máscaras; None si b no tiene negación.

        Raises:
            InvariantViolationError: Si dos candidatos dan veredictos distintos
        """
        candidates = self.negation_ids(b)
        if not candidates:
            return None
        sig_a = self.space.signature_bits(a)
        verdicts = {not sig_a & self.space.point_signatures[n] for n in candidates}
        if len(verdicts) > 1:
            logger.error("Candidatos a negación de %s discrepan en %s → %s",
                         self.space.labels_of(b), self.space.labels_of(a), self.space.labels_of(b))
            raise InvariantViolationError(
                f"La implicación {self.space.labels_of(a)} → {self.space.labels_of(b)} "
                f"depende del candidato a negación elegido"
            )
        return verdicts.pop()

    def implies(self, a: Subset, b: Subset) -> TernaryVerdict:
        self.space.check_width(a)
        self.space.check_width(b)
        verdict = self.implies_bits(a.bits, b.bits)
        if verdict is None:
            return TernaryVerdict.undefined(
                f"no existe negación para {{{', '.join(self.space.labels_of(b))}}}"
            )
        return TernaryVerdict.of(verdict)

    def join_id(self, x: int, y: int) -> Optional[int]:
        """x ∨ y = ¬{x̄, ȳ} usando representantes."""
        x_neg = self.representative_negation(1 << x)
        if x_neg is None:
            return None
        y_neg = self.representative_negation(1 << y)
        if y_neg is None:
            return None
        return self.representative_negation((1 << x_neg) | (1 << y_neg))

    def join(self, x: Point, y: Point) -> Optional[Point]:
        joined = self.join_id(x.id, y.id)
        return None if joined is None else self.space.points[joined]

    def join_search(self, x: Point, y: Point) -> JoinResult:
        """Como join, pero conserva el conjunto negado y todos sus candidatos."""
        negations = []
        for point in (x, y):
            negated_point = self.representative_negation(1 << point.id)
            if negated_point is None:
                return JoinResult(x, y, None, None, None, self.mode, f"no existe negación para {point.label}")
            negations.append(negated_point)
        negated = self.space.subset_of((1 << negations[0]) | (1 << negations[1]))
        negation = self.find_negations(negated)
        reason = "" if negation.exists else (
            f"no existe negación para {{{', '.join(self.space.labels_of(negated))}}}"
        )
        return JoinResult(x, y, negated, negation, negation.representative, self.mode, reason)

    def lub_check(self, x: Point, y: Point) -> LubReport:
        """
        Para cada punto t verifica las dos direcciones:

        - cota superior mínima: (x → t ∧ y → t) ⇒ (x ∨ y) → t
        - introducción del meet: (t → x ∧ t → y) ⇒ t → {x, y}
        """
        joined = self.join_id(x.id, y.id)
        meet_bits = (1 << x.id) | (1 << y.id)
        report = LubReport(
            x=x, y=y,
            join=None if joined is None else self.space.points[joined],
            meet=self.space.subset_of(meet_bits),
            mode=self.mode,
        )
        for t in self.space.points:
            upper, upper_reason = self._upper_status(x.id, y.id, joined, t.id)
            lower, lower_reason = self._lower_status(x.id, y.id, meet_bits, t.id)
            report.entries.append(LubEntry(t, upper, lower, upper_reason, lower_reason))
        logger.debug("lub_check(%s, %s): %d omisiones", x.label, y.label, report.skipped)
        return report

    def _upper_status(self, x: int, y: int, joined: Optional[int], t: int) -> Tuple[BoundStatus, str]:
        if joined is None:
            return BoundStatus.SKIPPED, "join indefinido"
        x_t = self.implies_bits(1 << x, 1 << t)
        y_t = self.implies_bits(1 << y, 1 << t)
        if x_t is None or y_t is None:
            return BoundStatus.SKIPPED, f"no existe negación para {self.space.points[t].label}"
        if not (x_t and y_t):
            return BoundStatus.VACUOUS, ""
        j_t = self.implies_bits(1 << joined, 1 << t)
        return (BoundStatus.HOLDS, "") if j_t else (BoundStatus.REFUTED, "x ∨ y no implica t")

    def _lower_status(self, x: int, y: int, meet_bits: int, t: int) -> Tuple[BoundStatus, str]:
        t_x = self.implies_bits(1 << t, 1 << x)
        t_y = self.implies_bits(1 << t, 1 << y)
        if t_x is None or t_y is None:
            return BoundStatus.SKIPPED, "no existe negación para x o y"
        if not (t_x and t_y):
            return BoundStatus.VACUOUS, ""
        t_meet = self.implies_bits(1 << t, meet_bits)
        if t_meet is None:
            return BoundStatus.SKIPPED, f"no existe negación para {{{', '.join(self.space.labels_of(meet_bits))}}}"
        return (BoundStatus.HOLDS, "") if t_meet else (BoundStatus.REFUTED, "t no implica {x, y}")


def meet(a: Subset, b: Subset) -> Subset:
    """Intersección de conjunciones: la unión de conjuntos."""
    return a.union(b)


# =====================================================================
# Funciones de conveniencia
# =====================================================================

def is_negation(space: Space, a: Subset, y: Point, mode: "ZMode | str" = ZMode.SUBSETS) -> bool:
    return ConnectiveEngine(space, mode).is_negation(a, y)


def is_negation_bruteforce(space: Space, a: Subset, y: Point, mode: "ZMode | str" = ZMode.SUBSETS,
                           cap: Optional[int] = None) -> bool:
    return ConnectiveEngine(space, mode, cap).is_negation_bruteforce(a, y)


def find_negations(space: Space, a: Subset, mode: "ZMode | str" = ZMode.SUBSETS) -> NegationResult:
    return ConnectiveEngine(space, mode).find_negations(a)


def implies(space: Space, a: Subset, b: Subset, mode: "ZMode | str" = ZMode.SUBSETS) -> TernaryVerdict:
    return ConnectiveEngine(space, mode).implies(a, b)


def join(space: Space, x: Point, y: Point, mode: "ZMode | str" = ZMode.SUBSETS) -> Optional[Point]:
    return ConnectiveEngine(space, mode).join(x, y)


def lub_check(space: Space, x: Point, y: Point, mode: "ZMode | str" = ZMode.SUBSETS) -> LubReport:
    return ConnectiveEngine(space, mode).lub_check(x, y)
