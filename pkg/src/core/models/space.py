"""
Modelo de dominio para espacios de consistencia.

Un espacio {X, ℘} se representa por su universo de puntos etiquetados y por
la anticadena de sus conjuntos consistentes maximales. ℘ es derivado:
A ∈ ℘ si y solo si A ⊆ M para algún maximal M, de modo que la clausura
hacia abajo (axioma 3) se cumple por construcción.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ...shared.exceptions import CapExceededError, UnknownLabelError, WidthMismatchError
from ...shared.utils import (
    bits_to_ids,
    canonical_key,
    full_mask,
    ids_to_bits,
    is_subset,
    masks_by_size,
    popcount,
)

logger = logging.getLogger(__name__)

# Constructores cuyo espacio proviene de un álgebra de Boole
ALGEBRAIC_ORIGINS = ("literal", "boolean", "formulas")


@dataclass(frozen=True)
class Point:
    """Elemento x ∈ X: índice interno y etiqueta visible."""
    id: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Subset:
    """
    Subconjunto de X como vector de bits de ancho |X|.

    Los conjuntos hacen también de conjunciones: la unión de dos
    subconjuntos es su "intersección" lógica.
    """
    bits: int
    width: int

    def __post_init__(self):
        """Validación post-inicialización."""
        if self.width < 0:
            raise ValueError("width debe ser no negativo")
        if self.bits < 0 or self.bits >> self.width:
            raise WidthMismatchError(self.width, self.bits.bit_length())

    @classmethod
    def empty(cls, width: int) -> 'Subset':
        """Subconjunto vacío."""
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> 'Subset':
        """El universo completo X."""
        return cls(full_mask(width), width)

    @classmethod
    def from_ids(cls, ids: Iterable[int], width: int) -> 'Subset':
        """Construye el subconjunto a partir de índices de puntos."""
        return cls(ids_to_bits(ids), width)

    @property
    def ids(self) -> Tuple[int, ...]:
        """Índices miembros en orden creciente."""
        return bits_to_ids(self.bits)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Clave tamaño-luego-lexicográfico."""
        return canonical_key(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids)

    def __contains__(self, point_id: object) -> bool:
        return isinstance(point_id, int) and 0 <= point_id < self.width and bool(self.bits >> point_id & 1)

    def _check_width(self, other: 'Subset'):
        if other.width != self.width:
            raise WidthMismatchError(self.width, other.width)

    def union(self, other: 'Subset') -> 'Subset':
        """Unión de conjuntos (conjunción lógica)."""
        self._check_width(other)
        return Subset(self.bits | other.bits, self.width)

    def intersection(self, other: 'Subset') -> 'Subset':
        """Intersección de conjuntos."""
        self._check_width(other)
        return Subset(self.bits & other.bits, self.width)

    def complement(self) -> 'Subset':
        """Complemento respecto de X."""
        return Subset(full_mask(self.width) ^ self.bits, self.width)

    def issubset(self, other: 'Subset') -> bool:
        """Indica si self ⊆ other."""
        self._check_width(other)
        return is_subset(self.bits, other.bits)

    __or__ = union
    __and__ = intersection
    __le__ = issubset


class ViolationKind(Enum):
    """Invariantes estructurales que puede violar un espacio."""
    NONEMPTY_UNIVERSE = "nonempty-universe"
    POINT_IDS = "point-ids"
    UNIQUE_LABELS = "unique-labels"
    ANTICHAIN = "antichain"
    AXIOM_1 = "axiom-1"          # X ∉ ℘
    AXIOM_2 = "axiom-2"          # {x} ∈ ℘ para todo x


@dataclass(frozen=True)
class Violation:
    """Una violación concreta con su testigo."""
    kind: ViolationKind
    witness: Optional[Union[Subset, Point]]
    message: str


@dataclass
class ValidationReport:
    """Resultado de validar un espacio; ok si y solo si no hay violaciones."""
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        """Tipos de violación presentes, en orden de aparición."""
        return [v.kind for v in self.violations]

    def summary(self) -> str:
        """Resumen de una línea."""
        if self.ok:
            return "espacio válido"
        return "; ".join(f"[{v.kind.value}] {v.message}" for v in self.violations)


class Space:
    """
    Espacio de consistencia finito {X, ℘}.

    Inmutable tras la construcción. El constructor no valida axiomas (para poder
    informar sobre espacios inválidos); los constructores de builders y el
    cargador de archivos validan antes de entregar el espacio.

    Attributes:
        points: Puntos del universo, ordenados por id
        maximal: Conjuntos consistentes maximales en orden canónico
            (tamaño descendente, luego lexicográfico)
        origin: Descriptor opcional del constructor que generó el espacio
    """

    def __init__(self, points: Sequence[Point], maximal: Sequence[Subset],
                 origin: Optional[Mapping[str, Any]] = None):
        """
        Inicializa el espacio y precalcula las firmas de cada punto.

        Args:
            points: Lista de puntos
            maximal: Conjuntos consistentes maximales
            origin: Descriptor del constructor (opcional)

        Raises:
            WidthMismatchError: Si algún maximal no tiene ancho |X|
        """
        self._points: Tuple[Point, ...] = tuple(points)
        width = len(self._points)
        for subset in maximal:
            if subset.width != width:
                raise WidthMismatchError(width, subset.width)

        self._maximal: Tuple[Subset, ...] = tuple(
            sorted(maximal, key=lambda s: (-len(s), s.ids))
        )
        self._maximal_bits: Tuple[int, ...] = tuple(s.bits for s in self._maximal)
        self._origin: Dict[str, Any] = dict(origin) if origin else {}

        self._label_index: Dict[str, Point] = {}
        for point in self._points:
            self._label_index.setdefault(point.label, point)

        # Firma de cada punto: bit i activo si el punto pertenece al maximal i
        self._full_signature = full_mask(len(self._maximal_bits))
        self._point_signatures: Tuple[int, ...] = tuple(
            ids_to_bits(i for i, m in enumerate(self._maximal_bits) if m >> p & 1)
            for p in range(width)
        )

    # =====================================================================
    # Acceso básico
    # =====================================================================

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def size(self) -> int:
        """|X|."""
        return len(self._points)

    @property
    def maximal(self) -> Tuple[Subset, ...]:
        return self._maximal

    @property
    def maximal_bits(self) -> Tuple[int, ...]:
        return self._maximal_bits

    @property
    def origin(self) -> Dict[str, Any]:
        return dict(self._origin)

    @property
    def is_algebraic(self) -> bool:
        """Indica si el espacio proviene de un álgebra de Boole (literal, booleano o fórmulas)."""
        return self._origin.get("kind") in ALGEBRAIC_ORIGINS

    @property
    def labels(self) -> List[str]:
        return [p.label for p in self._points]

    def point(self, label: str) -> Point:
        """
        Busca un punto por etiqueta.

        Raises:
            UnknownLabelError: Si la etiqueta no existe
        """
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def subset(self, labels: Iterable[str]) -> Subset:
        """Subconjunto formado por las etiquetas dadas."""
        return Subset.from_ids((self.point(label).id for label in labels), self.size)

    def subset_of(self, bits: int) -> Subset:
        """Envuelve una máscara en un Subset del ancho del espacio."""
        return Subset(bits, self.size)

    def singleton(self, point: Union[Point, int]) -> Subset:
        """El conjunto {x}."""
        point_id = point.id if isinstance(point, Point) else point
        return Subset(1 << point_id, self.size)

    def empty(self) -> Subset:
        return Subset.empty(self.size)

    def universe(self) -> Subset:
        return Subset.full(self.size)

    def labels_of(self, subset: Union[Subset, int]) -> List[str]:
        """Etiquetas de los miembros en orden de id."""
        bits = subset.bits if isinstance(subset, Subset) else subset
        return [self._points[i].label for i in bits_to_ids(bits)]

    def check_width(self, subset: Subset):
        """Verifica que el subconjunto pertenezca a este universo."""
        if subset.width != self.size:
            raise WidthMismatchError(self.size, subset.width)

    def require_within_cap(self, operation: str, cap: int, proposition: Optional[str] = None):
        """
        Rechaza operaciones exhaustivas sobre universos mayores que el límite.

        Raises:
            CapExceededError: Si |X| > cap
        """
        if self.size > cap:
            raise CapExceededError(operation, self.size, cap, proposition)

    # =====================================================================
    # Consistencia
    # =====================================================================

    def is_consistent(self, subset: Subset) -> bool:
        """
        Indica si el subconjunto pertenece a ℘ (está contenido en algún maximal).

        Raises:
            WidthMismatchError: Si el ancho no coincide con |X|
        """
        self.check_width(subset)
        return self.is_consistent_bits(subset.bits)

    def is_consistent_bits(self, bits: int) -> bool:
        """Versión sobre máscaras de is_consistent."""
        return any(bits & ~m == 0 for m in self._maximal_bits)

    def maximal_consistent_sets(self) -> List[Subset]:
        """La anticadena almacenada, en orden (tamaño descendente, lexicográfico)."""
        return list(self._maximal)

    def enumerate_consistent(self, max_size: Optional[int] = None, cap: Optional[int] = None) -> Iterator[Subset]:
        """
        Genera cada A ∈ ℘ exactamente una vez, en orden tamaño-luego-lexicográfico.

        Args:
            max_size: Tamaño máximo de los conjuntos generados (None = todos)
            cap: Límite exhaustivo de puntos (None = el configurado)

        Raises:
            CapExceededError: Si |X| supera el límite
        """
        if cap is None:
            from ...infrastructure.config.settings import get_max_points
            cap = get_max_points()
        self.require_within_cap("enumerate_consistent", cap)
        return self._enumerate_consistent(max_size)

    def _enumerate_consistent(self, max_size: Optional[int]) -> Iterator[Subset]:
        current_size = -1
        found_at_size = True
        for bits in masks_by_size(self.size, max_size):
            size = popcount(bits)
            if size != current_size:
                # ℘ es cerrado hacia abajo: un nivel vacío corta los siguientes
                if not found_at_size:
                    return
                current_size, found_at_size = size, False
            if self.is_consistent_bits(bits):
                found_at_size = True
                yield Subset(bits, self.size)

    # =====================================================================
    # Firmas (conjuntos maximales que contienen a un subconjunto)
    # =====================================================================

    @property
    def full_signature(self) -> int:
        """Firma del conjunto vacío: todos los maximales."""
        return self._full_signature

    @property
    def point_signatures(self) -> Tuple[int, ...]:
        return self._point_signatures

    def signature_bits(self, bits: int) -> int:
        """
        Firma de un subconjunto como máscara sobre índices de maximales.

        Se cumple firma(A ∪ B) = firma(A) ∩ firma(B); la firma es vacía
        exactamente cuando A es inconsistente.
        """
        signature = self._full_signature
        while bits and signature:
            low = bits & -bits
            signature &= self._point_signatures[low.bit_length() - 1]
            bits ^= low
        return signature

    def maximal_of_signature(self, signature: int) -> List[Subset]:
        """Traduce una firma a la lista de maximales que representa."""
        return [self._maximal[i] for i in bits_to_ids(signature)]

    # =====================================================================
    # Igualdad y representación
    # =====================================================================

    def __eq__(self, other) -> bool:
        if not isinstance(other, Space):
            return NotImplemented
        return (self.labels == other.labels
                and self._maximal_bits == other._maximal_bits
                and self._origin == other._origin)

    def __hash__(self) -> int:
        return hash((tuple(self.labels), self._maximal_bits))

    def __repr__(self) -> str:
        kind = self._origin.get("kind", "explicit")
        return f"Space(kind={kind}, points={self.size}, maximal={len(self._maximal)})"
