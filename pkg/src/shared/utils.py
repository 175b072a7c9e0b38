"""
Utilidades compartidas para manipulación de vectores de bits.

Los subconjuntos del universo se representan internamente como enteros
donde el bit i indica pertenencia del punto i.
"""

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Tuple


def full_mask(width: int) -> int:
    """Máscara con los `width` bits inferiores activos."""
    return (1 << width) - 1


def popcount(bits: int) -> int:
    """Número de bits activos."""
    return bits.bit_count()


def iter_bits(bits: int) -> Iterator[int]:
    """Itera los índices de los bits activos en orden creciente."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def bits_to_ids(bits: int) -> Tuple[int, ...]:
    """Convierte una máscara en la tupla ordenada de índices."""
    return tuple(iter_bits(bits))


def ids_to_bits(ids: Iterable[int]) -> int:
    """Convierte índices en máscara."""
    bits = 0
    for i in ids:
        bits |= 1 << i
    return bits


def is_subset(inner: int, outer: int) -> bool:
    """Indica si `inner` ⊆ `outer`."""
    return inner & ~outer == 0


def canonical_key(bits: int) -> Tuple[int, Tuple[int, ...]]:
    """
    Clave canónica de orden: primero tamaño, luego orden lexicográfico de índices.

    Todas las salidas deterministas del sistema se ordenan con esta clave.
    """
    return (popcount(bits), bits_to_ids(bits))


def masks_by_size(width: int, max_size: Optional[int] = None) -> Iterator[int]:
    """
    Genera todas las máscaras de `width` bits en orden tamaño-luego-lexicográfico.

    Args:
        width: Número de bits del universo
        max_size: Tamaño máximo a generar (None = sin límite)
    """
    top = width if max_size is None else min(max_size, width)
    for size in range(top + 1):
        for combo in combinations(range(width), size):
            yield ids_to_bits(combo)


def antichain_maximal(masks: Iterable[int]) -> List[int]:
    """
    Conserva solo los elementos maximales bajo inclusión (sin duplicados).

    Args:
        masks: Familia de máscaras

    Returns:
        List[int]: Anticadena de los maximales, en orden canónico descendente
    """
    unique = sorted(set(masks), key=lambda m: (-popcount(m), bits_to_ids(m)))
    kept: List[int] = []
    for mask in unique:
        if not any(is_subset(mask, other) for other in kept):
            kept.append(mask)
    return kept


def antichain_minimal(masks: Iterable[int]) -> List[int]:
    """Conserva solo los elementos minimales bajo inclusión, en orden canónico."""
    unique = sorted(set(masks), key=canonical_key)
    kept: List[int] = []
    for mask in unique:
        if not any(is_subset(other, mask) for other in kept):
            kept.append(mask)
    return kept
