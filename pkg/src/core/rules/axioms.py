"""
Implementaciones concretas de los axiomas de un espacio de consistencia.

El axioma 3 (clausura hacia abajo) no necesita regla: se cumple por la
representación mediante conjuntos maximales.
"""

from typing import List

from ..models.space import Space, Violation, ViolationKind
from ...shared.utils import is_subset
from .interfaces import SpaceRule


class NonEmptyUniverseRule(SpaceRule):
    """
    El universo debe tener al menos un punto.

    Con X = ∅ el axioma 1 contradiría ∅ ∈ ℘.
    """

    @property
    def name(self) -> str:
        return "nonempty_universe"

    @property
    def description(self) -> str:
        return "Verifica que |X| >= 1"

    def check(self, space: Space) -> List[Violation]:
        if space.size == 0:
            return [Violation(ViolationKind.NONEMPTY_UNIVERSE, None, "El universo está vacío")]
        return []


class PointIdRule(SpaceRule):
    """Los ids de los puntos son 0..|X|-1 en orden."""

    @property
    def name(self) -> str:
        return "point_ids"

    @property
    def description(self) -> str:
        return "Verifica que los ids de punto sean contiguos y únicos"

    def check(self, space: Space) -> List[Violation]:
        return [
            Violation(ViolationKind.POINT_IDS, point,
                      f"El punto {point.label!r} tiene id {point.id}, se esperaba {index}")
            for index, point in enumerate(space.points)
            if point.id != index
        ]


class UniqueLabelRule(SpaceRule):
    """Las etiquetas son únicas y no vacías."""

    @property
    def name(self) -> str:
        return "unique_labels"

    @property
    def description(self) -> str:
        return "Verifica que las etiquetas sean no vacías y únicas"

    def check(self, space: Space) -> List[Violation]:
        violations = []
        seen = set()
        for point in space.points:
            if not point.label:
                violations.append(Violation(ViolationKind.UNIQUE_LABELS, point,
                                            f"El punto {point.id} tiene etiqueta vacía"))
            elif point.label in seen:
                violations.append(Violation(ViolationKind.UNIQUE_LABELS, point,
                                            f"Etiqueta duplicada: {point.label!r}"))
            seen.add(point.label)
        return violations


class AntichainRule(SpaceRule):
    """Ningún maximal contiene a otro (ni se repite)."""

    @property
    def name(self) -> str:
        return "antichain"

    @property
    def description(self) -> str:
        return "Verifica que los conjuntos maximales formen una anticadena"

    def check(self, space: Space) -> List[Violation]:
        violations = []
        maximal = space.maximal
        for i, inner in enumerate(maximal):
            for j, outer in enumerate(maximal):
                if i != j and is_subset(inner.bits, outer.bits) and (inner.bits != outer.bits or i > j):
                    violations.append(Violation(
                        ViolationKind.ANTICHAIN, inner,
                        f"{space.labels_of(inner)} está contenido en {space.labels_of(outer)}"
                    ))
                    break
        return violations


class ProperUniverseRule(SpaceRule):
    """
    Axioma 1: X ∉ ℘.

    Como ℘ está determinado por los maximales, basta con que ninguno sea X.
    """

    @property
    def name(self) -> str:
        return "axiom_1"

    @property
    def description(self) -> str:
        return "Verifica que el universo completo sea inconsistente"

    def check(self, space: Space) -> List[Violation]:
        if space.size and space.is_consistent(space.universe()):
            return [Violation(ViolationKind.AXIOM_1, space.universe(),
                              "X ∈ ℘: el universo completo es consistente")]
        return []


class SingletonRule(SpaceRule):
    """Axioma 2: {x} ∈ ℘ para cada punto, es decir, todo punto está en algún maximal."""

    @property
    def name(self) -> str:
        return "axiom_2"

    @property
    def description(self) -> str:
        return "Verifica que cada punto pertenezca a algún conjunto maximal"

    def check(self, space: Space) -> List[Violation]:
        return [
            Violation(ViolationKind.AXIOM_2, point,
                      f"{{{point.label}}} ∉ ℘: el punto no aparece en ningún maximal")
            for point in space.points
            if not space.is_consistent(space.singleton(point))
        ]


DEFAULT_AXIOM_RULES: List[SpaceRule] = [
    NonEmptyUniverseRule(),
    PointIdRule(),
    UniqueLabelRule(),
    AntichainRule(),
    ProperUniverseRule(),
    SingletonRule(),
]
