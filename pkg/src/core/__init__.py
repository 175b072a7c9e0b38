"""
Core Domain - Dominio puro de los espacios de consistencia.

Este paquete contiene toda la lógica de dominio pura del sistema,
incluyendo modelos, reglas y servicios de dominio.
"""

from .models import Point, Space, Subset, ValidationReport
from .rules import PropositionId, default_validator, validate
from .services import (
    ConnectiveEngine,
    EquivalenceAnalyzer,
    SpaceAuditor,
    SpaceBuilder,
    StructureAnalyzer,
    ZMode,
)

__all__ = [
    'Point',
    'Space',
    'Subset',
    'ValidationReport',
    'PropositionId',
    'default_validator',
    'validate',
    'ConnectiveEngine',
    'EquivalenceAnalyzer',
    'SpaceAuditor',
    'SpaceBuilder',
    'StructureAnalyzer',
    'ZMode',
]
