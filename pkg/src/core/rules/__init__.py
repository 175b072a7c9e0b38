"""
Core Rules - Reglas de dominio.

Este paquete contiene los axiomas de un espacio de consistencia, el
validador compuesto que los aplica y el registro de proposiciones auditables.
"""

from .interfaces import SpaceRule, SpaceValidator
from .axioms import (
    AntichainRule,
    NonEmptyUniverseRule,
    PointIdRule,
    ProperUniverseRule,
    SingletonRule,
    UniqueLabelRule,
    DEFAULT_AXIOM_RULES,
)
from .validators import AxiomValidator, default_validator, validate
from .propositions import (
    PROPOSITION_REGISTRY,
    PropositionId,
    PropositionSpec,
    VariableKind,
    all_propositions,
    parse_propositions,
)

__all__ = [
    # Interfaces
    'SpaceRule',
    'SpaceValidator',

    # Axiom implementations
    'AntichainRule',
    'NonEmptyUniverseRule',
    'PointIdRule',
    'ProperUniverseRule',
    'SingletonRule',
    'UniqueLabelRule',
    'DEFAULT_AXIOM_RULES',

    # Validators
    'AxiomValidator',
    'default_validator',
    'validate',

    # Propositions
    'PROPOSITION_REGISTRY',
    'PropositionId',
    'PropositionSpec',
    'VariableKind',
    'all_propositions',
    'parse_propositions',
]
