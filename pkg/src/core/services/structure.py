"""
Servicio de estructura - Dominio puro.

Enumera los conjuntos inconsistentes minimales y decide si un espacio es un
espacio de consistencia booleano: sus inconsistentes minimales son dobletes
disjuntos que cubren X y ℘ queda determinado por ellos.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional

from ...shared.exceptions import CapExceededError
from ...shared.utils import antichain_minimal
from ..models.space import Space, Subset

logger = logging.getLogger(__name__)

# Lectura adoptada de la condición de exactitud; se incluye en cada reporte
EXACTNESS_READING = (
    "℘ = {A : A no contiene ningún doblete completo}; la lectura literal "
    "(℘ ⊆ subconjuntos de un doblete) contradiría el axioma 2 con dos o más dobletes"
)

# Tamaño máximo explorado cuando se permite un resultado parcial
PARTIAL_MAX_SIZE = 3


@dataclass
class MinimalInconsistentFamily:
    """
    Anticadena de conjuntos inconsistentes cuyos subconjuntos propios son consistentes.

    Attributes:
        sets: Miembros en orden tamaño-luego-lexicográfico
        complete: False si la búsqueda se cortó por el límite exhaustivo
        max_size_searched: Tamaño máximo visitado cuando la búsqueda es parcial
    """
    sets: List[Subset] = field(default_factory=list)
    complete: bool = True
    max_size_searched: Optional[int] = None

    def __len__(self) -> int:
        return len(self.sets)

    def covers(self, subset: Subset) -> bool:
        """Indica si subset contiene algún miembro (es decir, si es inconsistente)."""
        return any(member.bits & ~subset.bits == 0 for member in self.sets)


@dataclass
class ConditionCheck:
    """Veredicto de una condición de la definición booleana con su testigo."""
    name: str
    passed: bool
    witness: List[Subset] = field(default_factory=list)
    message: str = ""
    vacuous: bool = False


@dataclass
class BooleanDetectReport:
    """Resultado de detect_boolean: una entrada por condición, en orden."""
    doubleton_check: ConditionCheck
    disjoint_check: ConditionCheck
    cover_check: ConditionCheck
    exactness_check: ConditionCheck
    equiv_supersets_check: ConditionCheck
    pairing: Dict[str, str] = field(default_factory=dict)
    exactness_reading: str = EXACTNESS_READING

    @property
    def checks(self) -> List[ConditionCheck]:
        return [self.doubleton_check, self.disjoint_check, self.cover_check,
                self.exactness_check, self.equiv_supersets_check]

    @property
    def is_boolean(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def first_failure(self) -> Optional[ConditionCheck]:
        return next((check for check in self.checks if not check.passed), None)


class StructureAnalyzer:
    """Analizador estructural de un espacio inmutable."""

    def __init__(self, space: Space, cap: Optional[int] = None):
        if cap is None:
            from ...infrastructure.config.settings import get_max_points
            cap = get_max_points()
        self.space = space
        self.cap = cap

    def minimal_inconsistent_sets(self, allow_partial: bool = False,
                                  partial_max_size: int = PARTIAL_MAX_SIZE) -> MinimalInconsistentFamily:
        """
        Búsqueda por tamaño creciente con poda por superconjuntos.

        Un nivel sin conjuntos consistentes termina la búsqueda: todo conjunto
        mayor contiene uno de ese nivel, y por tanto algún miembro ya hallado.

        Args:
            allow_partial: Por encima del límite, explorar hasta partial_max_size
                           en lugar de rechazar
            partial_max_size: Tamaño máximo de la búsqueda parcial

        Raises:
            CapExceededError: Si |X| supera el límite y no se permite resultado parcial
        """
        space = self.space
        max_size: Optional[int] = None
        if space.size > self.cap:
            if not allow_partial:
                raise CapExceededError("minimal_inconsistent_sets", space.size, self.cap)
            max_size = partial_max_size
            logger.warning("Búsqueda parcial de inconsistentes minimales en %r hasta tamaño %d",
                           space, max_size)

        found: List[int] = []
        exhausted = False
        top = space.size if max_size is None else min(max_size, space.size)
        for size in range(top + 1):
            any_consistent = False
            for ids in combinations(range(space.size), size):
                bits = 0
                for i in ids:
                    bits |= 1 << i
                if space.is_consistent_bits(bits):
                    any_consistent = True
                elif not any(m & ~bits == 0 for m in found):
                    found.append(bits)
            if not any_consistent:
                exhausted = True
                break

        complete = exhausted or top == space.size
        family = MinimalInconsistentFamily(
            sets=[space.subset_of(m) for m in found],
            complete=complete,
            max_size_searched=None if complete else top,
        )
        logger.debug("Inconsistentes minimales de %r: %d (completo=%s)", space, len(family), complete)
        return family

    def detect_boolean(self) -> BooleanDetectReport:
        """
        Comprueba, en orden: (i) dobletes, (ii) disjuntos, (iii) cubren X,
        (iv) exactitud y (v) equivalencia de los inconsistentes minimales por
        encima de cada A ∈ ℘.

        Raises:
            CapExceededError: Si |X| supera el límite exhaustivo
        """
        space = self.space
        family = self.minimal_inconsistent_sets()
        doubletons = [s for s in family.sets if len(s) == 2]
        others = [s for s in family.sets if len(s) != 2]

        doubleton_check = ConditionCheck(
            "doubletons", not others, others[:1],
            "" if not others else f"{space.labels_of(others[0])} no es un doblete",
        )

        overlap = next(
            ([a, b] for a, b in combinations(doubletons, 2) if a.bits & b.bits), []
        )
        disjoint_check = ConditionCheck(
            "disjoint", not overlap, overlap,
            "" if not overlap else
            f"{space.labels_of(overlap[0])} y {space.labels_of(overlap[1])} se solapan",
        )

        covered = 0
        for doubleton in doubletons:
            covered |= doubleton.bits
        uncovered = [space.singleton(p) for p in space.points if not covered >> p.id & 1]
        cover_check = ConditionCheck(
            "cover", not uncovered, uncovered,
            "" if not uncovered else
            f"Puntos sin pareja: {[space.points[s.ids[0]].label for s in uncovered]}",
        )

        # ℘ = {A : ningún miembro ⊆ A}; coincide con {A : ningún doblete ⊆ A}
        # exactamente cuando la familia solo tiene dobletes, y cualquier otro
        # miembro es un inconsistente que no contiene ningún doblete.
        exactness_check = ConditionCheck(
            "exactness", not others, others[:1],
            "" if not others else
            f"{space.labels_of(others[0])} es inconsistente pero no contiene ningún doblete",
        )

        equiv_check = self._equivalent_supersets(family)

        pairing: Dict[str, str] = {}
        report = BooleanDetectReport(doubleton_check, disjoint_check, cover_check,
                                     exactness_check, equiv_check)
        if report.is_boolean:
            mates = {}
            for doubleton in doubletons:
                first, second = doubleton.ids
                mates[first], mates[second] = second, first
            pairing = {space.points[p].label: space.points[mates[p]].label for p in sorted(mates)}
            report.pairing = pairing
        logger.debug("detect_boolean(%r) = %s", space, report.is_boolean)
        return report

    def _equivalent_supersets(self, family: MinimalInconsistentFamily) -> ConditionCheck:
        space = self.space
        vacuous = all(space.signature_bits(m.bits) == 0 for m in family.sets)
        for subset in space.enumerate_consistent(cap=self.cap):
            supersets = antichain_minimal(subset.bits | m.bits for m in family.sets)
            signatures = {space.signature_bits(s) for s in supersets}
            if len(signatures) > 1:
                first, second = _two_distinct(supersets, space)
                return ConditionCheck(
                    "equivalent_supersets", False,
                    [subset, space.subset_of(first), space.subset_of(second)],
                    f"Los inconsistentes minimales sobre {space.labels_of(subset)} no son equivalentes",
                    vacuous,
                )
        return ConditionCheck("equivalent_supersets", True, [], "", vacuous)


def _two_distinct(masks: List[int], space: Space):
    first = masks[0]
    signature = space.signature_bits(first)
    second = next(m for m in masks if space.signature_bits(m) != signature)
    return first, second


def minimal_inconsistent_sets(space: Space, allow_partial: bool = False,
                              cap: Optional[int] = None) -> MinimalInconsistentFamily:
    return StructureAnalyzer(space, cap).minimal_inconsistent_sets(allow_partial)


def detect_boolean(space: Space, cap: Optional[int] = None) -> BooleanDetectReport:
    return StructureAnalyzer(space, cap).detect_boolean()
