"""
Application Use Cases - Casos de uso de la capa de aplicación.
"""

from .analyze_space import (
    AnalysisKind,
    AnalysisRequest,
    AnalysisResult,
    AnalyzeSpaceUseCase,
    ImplicationQuery,
    MeetQuery,
    split_labels,
)
from .audit_space import AuditRequest, AuditResult, AuditSpaceUseCase
from .build_space import BuildRequest, BuildResult, BuildSpaceUseCase

__all__ = [
    # Build Space
    'BuildRequest',
    'BuildResult',
    'BuildSpaceUseCase',

    # Analyze Space
    'AnalysisKind',
    'AnalysisRequest',
    'AnalysisResult',
    'AnalyzeSpaceUseCase',
    'ImplicationQuery',
    'MeetQuery',
    'split_labels',

    # Audit Space
    'AuditRequest',
    'AuditResult',
    'AuditSpaceUseCase',
]
