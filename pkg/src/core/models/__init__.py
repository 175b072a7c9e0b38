"""
Core Models - Entidades y objetos de valor del dominio.

Este paquete contiene los modelos de dominio puros: puntos, subconjuntos,
espacios de consistencia y fórmulas proposicionales.
"""

from .space import (
    ALGEBRAIC_ORIGINS,
    Point,
    Space,
    Subset,
    ValidationReport,
    Violation,
    ViolationKind,
)
from .formula import (
    And,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    TruthTable,
    Var,
    format_compact,
    format_parenthesized,
)

__all__ = [
    # Space models
    'ALGEBRAIC_ORIGINS',
    'Point',
    'Space',
    'Subset',
    'ValidationReport',
    'Violation',
    'ViolationKind',

    # Formula models
    'And',
    'Formula',
    'Iff',
    'Implies',
    'Not',
    'Or',
    'TruthTable',
    'Var',
    'format_compact',
    'format_parenthesized',
]
