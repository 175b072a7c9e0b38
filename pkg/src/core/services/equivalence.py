"""
Servicio de equivalencia - Dominio puro.

Decide χ ~ γ con dos oráculos independientes:

- equivalent_bruteforce: transcripción literal de la definición, recorre
  todos los κ ⊆ X comprobando la consistencia contra los maximales.
- equivalent: compara firmas (el conjunto de maximales que contienen a cada
  subconjunto). Dos conjuntos son equivalentes exactamente cuando sus firmas
  coinciden, lo que reduce una decisión O(2^|X|) a O(|maximales|·|X|).

La batería de pruebas contrasta ambos oráculos sobre el corpus.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..models.space import Space, Subset
from ...shared.utils import bits_to_ids, masks_by_size, popcount

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    """
    Conjuntos consistentes maximales que contienen a un subconjunto.

    Attributes:
        bits: Máscara sobre los índices de los maximales del espacio
        maximal: Los maximales representados, en orden canónico
    """
    bits: int
    maximal: Tuple[Subset, ...]

    @property
    def is_empty(self) -> bool:
        """Vacía si y solo si el subconjunto es inconsistente."""
        return self.bits == 0

    def __len__(self) -> int:
        return len(self.maximal)


@dataclass
class EquivalenceClass:
    """Clase de ~ con su representante canónico (menor tamaño, luego lexicográfico)."""
    representative: Subset
    members: List[Subset]
    signature: Signature

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def consistent(self) -> bool:
        return not self.signature.is_empty


@dataclass
class QuotientSummary:
    """Resumen del cociente por ~ sobre los subconjuntos examinados."""
    classes: List[EquivalenceClass] = field(default_factory=list)
    subsets_examined: int = 0
    consistent_subsets: int = 0
    max_size: Optional[int] = None

    @property
    def class_count(self) -> int:
        return len(self.classes)


class EquivalenceAnalyzer:
    """
    Analizador de la relación ~ sobre un espacio inmutable.

    Attributes:
        space: Espacio analizado
        cap: Límite exhaustivo de puntos para las operaciones 2^|X|
    """

    def __init__(self, space: Space, cap: Optional[int] = None):
        if cap is None:
            from ...infrastructure.config.settings import get_max_points
            cap = get_max_points()
        self.space = space
        self.cap = cap
        self._consistency_table: Optional[bytes] = None

    # =====================================================================
    # Oráculos
    # =====================================================================

    def signature(self, subset: Subset) -> Signature:
        """Firma de un subconjunto: {M maximal : subset ⊆ M}."""
        self.space.check_width(subset)
        bits = self.space.signature_bits(subset.bits)
        return Signature(bits, tuple(self.space.maximal_of_signature(bits)))

    def equivalent(self, a: Subset, b: Subset) -> bool:
        """Oráculo de producción: igualdad de firmas."""
        self.space.check_width(a)
        self.space.check_width(b)
        return self.space.signature_bits(a.bits) == self.space.signature_bits(b.bits)

    def equivalent_bruteforce(self, a: Subset, b: Subset) -> bool:
        """
        Oráculo de referencia: para todo κ ⊆ X, a ∪ κ ∈ ℘ si y solo si b ∪ κ ∈ ℘.

        Raises:
            CapExceededError: Si |X| supera el límite exhaustivo
        """
        self.space.check_width(a)
        self.space.check_width(b)
        self.space.require_within_cap("equivalent_bruteforce", self.cap)
        return self._equivalent_bruteforce_bits(a.bits, b.bits)

    def _consistency(self) -> bytes:
        """Tabla de consistencia de las 2^|X| máscaras, contra los maximales."""
        if self._consistency_table is None:
            is_consistent = self.space.is_consistent_bits
            self._consistency_table = bytes(is_consistent(m) for m in range(1 << self.space.size))
            logger.debug("Tabla de consistencia de %d entradas", len(self._consistency_table))
        return self._consistency_table

    def _equivalent_bruteforce_bits(self, a: int, b: int) -> bool:
        table = self._consistency()
        for kappa in range(1 << self.space.size):
            if table[a | kappa] != table[b | kappa]:
                return False
        return True

    def distinguishing_kappa(self, a: Subset, b: Subset) -> Optional[Subset]:
        """
        Menor κ (tamaño, luego lexicográfico) con a ∪ κ y b ∪ κ de distinta consistencia.

        Returns:
            Subset o None si a ~ b
        """
        bits = self.distinguishing_kappa_bits(a.bits, b.bits)
        return None if bits is None else self.space.subset_of(bits)

    def distinguishing_kappa_bits(self, a: int, b: int) -> Optional[int]:
        space = self.space
        sig_a, sig_b = space.signature_bits(a), space.signature_bits(b)
        if sig_a == sig_b:
            return None
        if (sig_a == 0) != (sig_b == 0):
            return 0
        self.space.require_within_cap("distinguishing_kappa", self.cap)
        for kappa in masks_by_size(space.size):
            sig_k = space.signature_bits(kappa)
            if ((sig_a & sig_k) == 0) != ((sig_b & sig_k) == 0):
                return kappa
        # Inalcanzable: un maximal de la diferencia simétrica siempre distingue
        return None

    # =====================================================================
    # Clases de equivalencia
    # =====================================================================

    def classes(self, max_size: Optional[int] = None) -> List[EquivalenceClass]:
        """
        Particiona los subconjuntos (de tamaño <= max_size si se indica) por firma.

        Raises:
            CapExceededError: Si |X| supera el límite exhaustivo
        """
        return self.quotient(max_size).classes

    def quotient(self, max_size: Optional[int] = None) -> QuotientSummary:
        """Clases más los recuentos del cociente."""
        self.space.require_within_cap("classes", self.cap)
        buckets: Dict[int, List[int]] = {}
        examined = 0
        consistent = 0
        for bits in masks_by_size(self.space.size, max_size):
            examined += 1
            signature = self.space.signature_bits(bits)
            if signature:
                consistent += 1
            buckets.setdefault(signature, []).append(bits)

        classes = [
            EquivalenceClass(
                representative=self.space.subset_of(members[0]),
                members=[self.space.subset_of(m) for m in members],
                signature=Signature(sig, tuple(self.space.maximal_of_signature(sig))),
            )
            for sig, members in buckets.items()
        ]
        classes.sort(key=lambda c: c.representative.sort_key)
        logger.debug("Cociente de %r: %d clases sobre %d subconjuntos", self.space, len(classes), examined)
        return QuotientSummary(classes, examined, consistent, max_size)


def achievable_signatures(space: Space) -> List[int]:
    """
    Firmas realizadas por algún subconjunto de X.

    Es la clausura de las firmas de los puntos bajo intersección, más la firma
    del vacío. Cuantificar sobre todos los z ⊆ X en una condición que solo
    depende de la firma de z equivale a cuantificar sobre esta lista.
    """
    reached: Set[int] = {space.full_signature}
    for point_signature in space.point_signatures:
        reached |= {s & point_signature for s in reached}
    return sorted(reached, key=lambda s: (-popcount(s), bits_to_ids(s)))


# =====================================================================
# Funciones de conveniencia
# =====================================================================

def signature(space: Space, subset: Subset) -> Signature:
    return EquivalenceAnalyzer(space).signature(subset)


def equivalent(space: Space, a: Subset, b: Subset) -> bool:
    return EquivalenceAnalyzer(space).equivalent(a, b)


def equivalent_bruteforce(space: Space, a: Subset, b: Subset, cap: Optional[int] = None) -> bool:
    return EquivalenceAnalyzer(space, cap).equivalent_bruteforce(a, b)


def classes(space: Space, max_size: Optional[int] = None, cap: Optional[int] = None) -> List[EquivalenceClass]:
    return EquivalenceAnalyzer(space, cap).classes(max_size)
