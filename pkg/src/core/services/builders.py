"""
Servicio de construcción de espacios - Dominio puro.

Cinco constructores: explícito, de literales, álgebra de Boole libre
completa, respaldado por fórmulas y aleatorio con semilla. Todo espacio
devuelto pasa la validación de axiomas.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ...shared.exceptions import (
    GenerationError,
    InvalidArgumentError,
    SpaceValidationError,
    UnknownLabelError,
)
from ...shared.utils import antichain_maximal, full_mask, ids_to_bits
from ..models.formula import And, Formula, Not, Or, Var, format_compact
from ..models.space import Point, Space, Subset, ValidationReport, Violation, ViolationKind
from ..rules.validators import default_validator
from .formulas import collect_variables, truth_table, variable_mask

logger = logging.getLogger(__name__)

# Nombres de variable del constructor booleano completo
BOOLEAN_VAR_NAMES = ("a", "b", "c")

# Etiqueta del elemento máximo del álgebra
TOP_LABEL = "1"


class BuilderKind(Enum):
    """Constructores disponibles."""
    EXPLICIT = "explicit"
    LITERAL = "literal"
    BOOLEAN = "boolean"
    FORMULAS = "formulas"
    RANDOM = "random"


@dataclass
class BuilderConfig:
    """Parámetros de un constructor."""
    kind: BuilderKind
    n_vars: Optional[int] = None
    formulas: Optional[str] = None      # ruta del archivo de fórmulas
    num_points: Optional[int] = None
    num_maximal: Optional[int] = None
    seed: int = 0

    def validate(self, limits: Optional[Mapping[str, Any]] = None) -> List[str]:
        """Valida los parámetros según el tipo de constructor."""
        limits = _limits(limits)
        errors = []
        if self.kind is BuilderKind.LITERAL:
            if self.n_vars is None or not 1 <= self.n_vars <= limits["max_literal_vars"]:
                errors.append(
                    f"El constructor de literales requiere 1 <= n <= {limits['max_literal_vars']}"
                )
        elif self.kind is BuilderKind.BOOLEAN:
            if self.n_vars is None or not 1 <= self.n_vars <= limits["max_boolean_vars"]:
                errors.append(
                    f"El constructor booleano requiere 1 <= n <= {limits['max_boolean_vars']}"
                )
        elif self.kind is BuilderKind.FORMULAS:
            if not self.formulas:
                errors.append("El constructor de fórmulas requiere un archivo de fórmulas")
        elif self.kind is BuilderKind.RANDOM:
            if self.num_points is None or self.num_points < 1:
                errors.append("El constructor aleatorio requiere num_points >= 1")
            elif self.num_points > limits["max_random_points"]:
                errors.append(
                    f"El constructor aleatorio admite como mucho {limits['max_random_points']} puntos"
                )
            if self.num_maximal is None or self.num_maximal < 1:
                errors.append("El constructor aleatorio requiere num_maximal >= 1")
        return errors

    @property
    def descriptor(self) -> Dict[str, Any]:
        """Descriptor de procedencia que acompaña al espacio construido."""
        if self.kind in (BuilderKind.LITERAL, BuilderKind.BOOLEAN):
            return {"kind": self.kind.value, "n_vars": self.n_vars}
        if self.kind is BuilderKind.RANDOM:
            return {"kind": "random", "num_points": self.num_points,
                    "num_maximal": self.num_maximal, "seed": self.seed}
        return {"kind": self.kind.value}


def _limits(limits: Optional[Mapping[str, Any]]) -> Mapping[str, Any]:
    if limits is not None:
        return limits
    from ...infrastructure.config.settings import settings
    return settings.get_limits_config()


def _generation_attempts() -> int:
    from ...infrastructure.config.settings import settings
    return settings.get_setting("generation.max_attempts", 200)


class SpaceBuilder:
    """
    Construye espacios a partir de las distintas presentaciones.

    Attributes:
        limits: Límites de los constructores (por defecto los configurados)
        max_attempts: Reintentos del generador aleatorio
    """

    def __init__(self, limits: Optional[Mapping[str, Any]] = None, max_attempts: Optional[int] = None):
        self.limits = _limits(limits)
        self.max_attempts = _generation_attempts() if max_attempts is None else max_attempts

    def build(self, config: BuilderConfig,
              formulas: Optional[Sequence[Tuple[str, Formula]]] = None) -> Space:
        """
        Despacha según el tipo de constructor.

        Args:
            config: Parámetros del constructor
            formulas: Lista etiquetada ya cargada (solo para el constructor de fórmulas)

        Raises:
            InvalidArgumentError: Si los parámetros son inválidos
        """
        errors = config.validate(self.limits)
        if config.kind is BuilderKind.FORMULAS and formulas is not None:
            errors = []
        if errors:
            raise InvalidArgumentError("; ".join(errors))

        if config.kind is BuilderKind.LITERAL:
            return self.build_literal(config.n_vars)
        if config.kind is BuilderKind.BOOLEAN:
            return self.build_full_boolean(config.n_vars)
        if config.kind is BuilderKind.RANDOM:
            return self.random_space(config.num_points, config.num_maximal, config.seed)
        if config.kind is BuilderKind.FORMULAS:
            if formulas is None:
                raise InvalidArgumentError("Faltan las fórmulas a construir")
            return self.build_from_formulas(formulas)
        raise InvalidArgumentError("El constructor explícito requiere puntos y maximales")

    # =====================================================================
    # Constructores
    # =====================================================================

    def build_explicit(self, points: Sequence[str], maximal_sets: Sequence[Sequence[str]],
                       origin: Optional[Mapping[str, Any]] = None) -> Space:
        """
        Construye un espacio a partir de etiquetas y conjuntos maximales.

        Normaliza los maximales a una anticadena antes de validar.

        Raises:
            UnknownLabelError: Si un conjunto referencia una etiqueta inexistente
            SpaceValidationError: Si el espacio viola algún axioma
        """
        point_list = [Point(i, label) for i, label in enumerate(points)]
        index: Dict[str, int] = {}
        for point in point_list:
            index.setdefault(point.label, point.id)

        masks = []
        for labels in maximal_sets:
            try:
                masks.append(ids_to_bits(index[label] for label in labels))
            except KeyError as e:
                raise UnknownLabelError(e.args[0]) from None

        width = len(point_list)
        maximal = [Subset(m, width) for m in antichain_maximal(masks)]
        dropped = len(set(masks)) - len(maximal)
        if dropped:
            logger.debug("Normalización a anticadena: %d conjuntos dominados descartados", dropped)
        return self._validated(Space(point_list, maximal, origin or {"kind": "explicit"}))

    def build_literal(self, n: int) -> Space:
        """
        Espacio de literales: X = {v1, not_v1, ..., vn, not_vn}.

        Los maximales son las 2^n asignaciones (un literal de cada pareja).
        """
        if not 1 <= n <= self.limits["max_literal_vars"]:
            raise InvalidArgumentError(
                f"El constructor de literales requiere 1 <= n <= {self.limits['max_literal_vars']}, se recibió {n}"
            )
        points = []
        for i in range(1, n + 1):
            points.append(Point(len(points), f"v{i}"))
            points.append(Point(len(points), f"not_v{i}"))

        width = 2 * n
        maximal = []
        for assignment in range(1 << n):
            bits = 0
            for i in range(n):
                bits |= 1 << (2 * i if assignment >> i & 1 else 2 * i + 1)
            maximal.append(Subset(bits, width))
        return self._validated(Space(points, maximal, {"kind": "literal", "n_vars": n}))

    def build_full_boolean(self, n: int) -> Space:
        """
        Elementos no nulos del álgebra de Boole libre sobre n variables.

        El punto i tiene por máscara de tabla de verdad i + 1; el maximal de
        cada minitérmino son los puntos cuya máscara lo contiene.
        """
        if not 1 <= n <= self.limits["max_boolean_vars"]:
            raise InvalidArgumentError(
                f"El constructor booleano requiere 1 <= n <= {self.limits['max_boolean_vars']}, se recibió {n}"
            )
        labels = boolean_labels(n)
        top = full_mask(1 << n)
        points = [Point(mask - 1, labels[mask]) for mask in range(1, top + 1)]
        width = len(points)
        maximal = [
            Subset(ids_to_bits(mask - 1 for mask in range(1, top + 1) if mask >> minterm & 1), width)
            for minterm in range(1 << n)
        ]
        return self._validated(Space(points, maximal, {"kind": "boolean", "n_vars": n}))

    def build_from_formulas(self, formulas: Sequence[Tuple[str, Formula]]) -> Space:
        """
        Un punto por fórmula; A ∈ ℘ si la conjunción de sus fórmulas es satisfacible.

        Args:
            formulas: Pares (etiqueta, fórmula) en orden de punto

        Raises:
            InvalidArgumentError: Lista vacía o etiquetas duplicadas
            FormulaSizeError: Más de 16 variables combinadas
            SpaceValidationError: Fórmula insatisfacible (axioma 2) o
                                  conjunción total satisfacible (axioma 1)
        """
        if not formulas:
            raise InvalidArgumentError("Se requiere al menos una fórmula")
        labels = [label for label, _ in formulas]
        duplicated = sorted({label for label in labels if labels.count(label) > 1})
        if duplicated:
            raise InvalidArgumentError(f"Etiquetas duplicadas: {', '.join(duplicated)}")

        variables = collect_variables(f for _, f in formulas)
        masks = [truth_table(formula, variables).mask for _, formula in formulas]
        points = [Point(i, label) for i, label in enumerate(labels)]
        width = len(points)

        report = ValidationReport()
        for point, mask in zip(points, masks):
            if mask == 0:
                report.violations.append(Violation(
                    ViolationKind.AXIOM_2, point,
                    f"La fórmula de {point.label!r} es insatisfacible: {{{point.label}}} ∉ ℘"
                ))
        conjunction = full_mask(1 << len(variables))
        for mask in masks:
            conjunction &= mask
        if conjunction:
            report.violations.append(Violation(
                ViolationKind.AXIOM_1, Subset.full(width),
                "La conjunción de todas las fórmulas es satisfacible: X ∈ ℘"
            ))
        if not report.ok:
            raise SpaceValidationError(f"Espacio de fórmulas inválido: {report.summary()}", report)

        # Transponer: para cada asignación, los puntos verdaderos en ella
        assignments: Dict[int, int] = {}
        for point_id, mask in enumerate(masks):
            remaining = mask
            while remaining:
                low = remaining & -remaining
                j = low.bit_length() - 1
                assignments[j] = assignments.get(j, 0) | (1 << point_id)
                remaining ^= low
        maximal = [Subset(m, width) for m in antichain_maximal(assignments.values())]
        origin = {"kind": "formulas", "variables": variables}
        return self._validated(Space(points, maximal, origin))

    def random_space(self, num_points: int, num_maximal: int, seed: int = 0) -> Space:
        """
        Generación determinista: muestrea num_maximal subconjuntos propios y
        repite hasta cubrir todos los puntos.

        Raises:
            InvalidArgumentError: Parámetros fuera de rango
            GenerationError: Un solo punto, o cobertura imposible tras los reintentos
        """
        if num_points < 1 or num_maximal < 1:
            raise InvalidArgumentError("num_points y num_maximal deben ser al menos 1")
        if num_points > self.limits["max_random_points"]:
            raise InvalidArgumentError(
                f"El constructor aleatorio admite como mucho {self.limits['max_random_points']} puntos"
            )
        if num_points == 1:
            raise GenerationError(
                "Un espacio de un punto no puede cumplir a la vez {x} ∈ ℘ y X ∉ ℘"
            )

        rng = random.Random(seed)
        everything = full_mask(num_points)
        for attempt in range(1, self.max_attempts + 1):
            masks = []
            for _ in range(num_maximal):
                size = rng.randint(1, num_points - 1)
                masks.append(ids_to_bits(rng.sample(range(num_points), size)))
            covered = 0
            for mask in masks:
                covered |= mask
            if covered == everything:
                logger.debug("random_space(%d, %d, %d) cubierto en el intento %d",
                             num_points, num_maximal, seed, attempt)
                points = [Point(i, f"p{i}") for i in range(num_points)]
                maximal = [Subset(m, num_points) for m in antichain_maximal(masks)]
                origin = {"kind": "random", "num_points": num_points,
                          "num_maximal": num_maximal, "seed": seed}
                return self._validated(Space(points, maximal, origin))

        raise GenerationError(
            f"No se cubrieron los {num_points} puntos con {num_maximal} maximales "
            f"tras {self.max_attempts} intentos (semilla {seed})"
        )

    # =====================================================================
    # Validación
    # =====================================================================

    @staticmethod
    def _validated(space: Space) -> Space:
        report = default_validator.validate(space)
        if not report.ok:
            logger.debug("Espacio rechazado: %s", report.summary())
            raise SpaceValidationError(f"Espacio inválido: {report.summary()}", report)
        return space


# =====================================================================
# Etiquetas canónicas del álgebra libre
# =====================================================================

@lru_cache(maxsize=None)
def _shortest_formulas(n: int) -> Dict[int, str]:
    """
    Fórmula más corta (en nodos, con ¬ ∧ ∨) de cada máscara no nula y no total.

    Búsqueda por coste creciente; los empates se rompen por el texto compacto.
    """
    top = full_mask(1 << n)
    wanted = top - 1
    by_cost: Dict[int, List[Tuple[int, Formula]]] = {
        1: [(variable_mask(i, n), Var(name)) for i, name in enumerate(BOOLEAN_VAR_NAMES[:n])]
    }
    settled: Dict[int, str] = {mask: format_compact(f) for mask, f in by_cost[1]}
    cost = 1
    while len(settled) < wanted:
        cost += 1
        candidates: Dict[int, Tuple[str, Formula]] = {}

        def offer(mask: int, build):
            if mask in (0, top) or mask in settled:
                return
            formula = build()
            text = format_compact(formula)
            current = candidates.get(mask)
            if current is None or text < current[0]:
                candidates[mask] = (text, formula)

        for mask, formula in by_cost.get(cost - 1, []):
            offer(top ^ mask, lambda f=formula: Not(f))
        for left_cost in range(1, cost - 1):
            right_cost = cost - 1 - left_cost
            for left_mask, left in by_cost.get(left_cost, []):
                for right_mask, right in by_cost.get(right_cost, []):
                    offer(left_mask & right_mask, lambda l=left, r=right: And(l, r))
                    offer(left_mask | right_mask, lambda l=left, r=right: Or(l, r))

        by_cost[cost] = [(mask, candidates[mask][1]) for mask in sorted(candidates)]
        settled.update({mask: text for mask, (text, _) in candidates.items()})
    return settled


def boolean_labels(n: int) -> Dict[int, str]:
    """Etiqueta de cada máscara no nula: la fórmula más corta, o "1" para el máximo."""
    labels = dict(_shortest_formulas(n))
    labels[full_mask(1 << n)] = TOP_LABEL
    return labels


def boolean_point_label(mask: int, n: int) -> str:
    """Etiqueta canónica del elemento con máscara `mask` en el álgebra libre de n variables."""
    return boolean_labels(n)[mask]
