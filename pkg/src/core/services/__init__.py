"""
Core Services - Servicios de dominio.

Este paquete contiene los servicios de dominio que implementan la lógica
de análisis compleja: fórmulas, constructores, equivalencia, conectivas,
estructura y auditoría.
"""

from .formulas import (
    FormulaParser,
    collect_variables,
    conjunction_satisfiable,
    parse,
    truth_table,
)
from .builders import (
    BuilderConfig,
    BuilderKind,
    SpaceBuilder,
    boolean_labels,
    boolean_point_label,
)
from .equivalence import (
    EquivalenceAnalyzer,
    EquivalenceClass,
    QuotientSummary,
    Signature,
    achievable_signatures,
)
from .connectives import (
    BoundStatus,
    ConnectiveEngine,
    JoinResult,
    LubReport,
    NegationResult,
    TernaryVerdict,
    Verdict,
    ZMode,
    meet,
)
from .structure import (
    BooleanDetectReport,
    ConditionCheck,
    MinimalInconsistentFamily,
    StructureAnalyzer,
)
from .auditor import (
    AuditCampaign,
    AuditConfig,
    AuditReport,
    CampaignConfig,
    CampaignResult,
    PropositionResult,
    PropositionStatus,
    SpaceAuditor,
    audit_campaign,
    audit_space,
)

__all__ = [
    # Formulas
    'FormulaParser',
    'collect_variables',
    'conjunction_satisfiable',
    'parse',
    'truth_table',

    # Builders
    'BuilderConfig',
    'BuilderKind',
    'SpaceBuilder',
    'boolean_labels',
    'boolean_point_label',

    # Equivalence
    'EquivalenceAnalyzer',
    'EquivalenceClass',
    'QuotientSummary',
    'Signature',
    'achievable_signatures',

    # Connectives
    'BoundStatus',
    'ConnectiveEngine',
    'JoinResult',
    'LubReport',
    'NegationResult',
    'TernaryVerdict',
    'Verdict',
    'ZMode',
    'meet',

    # Structure
    'BooleanDetectReport',
    'ConditionCheck',
    'MinimalInconsistentFamily',
    'StructureAnalyzer',

    # Auditor
    'AuditCampaign',
    'AuditConfig',
    'AuditReport',
    'CampaignConfig',
    'CampaignResult',
    'PropositionResult',
    'PropositionStatus',
    'SpaceAuditor',
    'audit_campaign',
    'audit_space',
]
