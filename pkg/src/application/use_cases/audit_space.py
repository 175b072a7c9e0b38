"""
Caso de uso: Auditar proposiciones.

Audita un espacio guardado o ejecuta una campaña sobre el corpus de
constructores configurado.
"""

from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from ...core.rules.propositions import PropositionId
from ...core.services.auditor import (
    AuditCampaign,
    AuditConfig,
    AuditReport,
    CampaignConfig,
    CampaignResult,
    SpaceAuditor,
)
from ...shared.exceptions import CSpaceError, InvalidArgumentError
from ..ports import LoggingService, SpaceRepository


@dataclass
class AuditRequest:
    """Solicitud de auditoría: un archivo de espacio o una campaña."""
    space_path: Optional[str] = None
    campaign: bool = False
    propositions: Optional[List[PropositionId]] = None
    mode: Optional[str] = None
    seed: Optional[int] = None
    workers: Optional[int] = None
    force: bool = False

    def validate(self) -> List[str]:
        """Valida la solicitud de auditoría."""
        errors = []

        if self.campaign and self.space_path:
            errors.append("Indique un archivo de espacio o --campaign, no ambos")
        if not self.campaign and not (self.space_path and self.space_path.strip()):
            errors.append("Se requiere un archivo de espacio o --campaign")
        if self.workers is not None and self.workers < 1:
            errors.append("Debe haber al menos 1 worker")
        if self.propositions is not None and not self.propositions:
            errors.append("La lista de proposiciones no puede estar vacía")

        return errors


@dataclass
class AuditResult:
    """Resultado de la auditoría; report o campaign según la solicitud."""
    success: bool
    report: Optional[AuditReport]
    campaign: Optional[CampaignResult]
    audit_time: float
    message: str
    error: Optional[CSpaceError] = None

    @property
    def refuted(self) -> List[str]:
        """Proposiciones refutadas en algún espacio auditado."""
        if self.report is not None:
            return [p.value for p in self.report.refuted]
        if self.campaign is not None:
            return [s.proposition.value for s in self.campaign.summary if s.refuted]
        return []

    @classmethod
    def success_result(cls, audit_time: float, report: Optional[AuditReport] = None,
                       campaign: Optional[CampaignResult] = None) -> 'AuditResult':
        """Crea un resultado exitoso."""
        return cls(
            success=True,
            report=report,
            campaign=campaign,
            audit_time=audit_time,
            message="Auditoría completada exitosamente",
        )

    @classmethod
    def failure_result(cls, message: str, error: Optional[CSpaceError] = None) -> 'AuditResult':
        """Crea un resultado de fallo."""
        return cls(
            success=False,
            report=None,
            campaign=None,
            audit_time=0.0,
            message=message,
            error=error,
        )


class AuditSpaceUseCase:
    """
    Caso de uso para auditar espacios.

    Las refutaciones son datos del reporte, no fallos: una auditoría que
    refuta proposiciones termina con éxito.
    """

    def __init__(self,
                 space_repository: SpaceRepository,
                 logging_service: Optional[LoggingService] = None):
        self.space_repository = space_repository
        self.logging_service = logging_service

    def execute(self, request: AuditRequest) -> AuditResult:
        """
        Ejecuta la auditoría.

        Args:
            request: Solicitud de auditoría

        Returns:
            AuditResult: Reporte de un espacio o resultado de campaña
        """
        start_time = datetime.now()

        try:
            errors = request.validate()
            if errors:
                raise InvalidArgumentError("Solicitud inválida: " + "; ".join(errors))

            if request.campaign:
                name = "campaña"
                result = self._run_campaign(request)
            else:
                name = Path(request.space_path).stem
                result = self._run_single(request, name)

            result.audit_time = (datetime.now() - start_time).total_seconds()
            if self.logging_service:
                self.logging_service.log_audit_completed(name, result.refuted, result.audit_time)
            return result

        except CSpaceError as e:
            if self.logging_service:
                self.logging_service.log_error("audit_space", e, {
                    "space_path": request.space_path,
                    "campaign": request.campaign,
                })
            return AuditResult.failure_result(str(e), e)
        except Exception as e:
            if self.logging_service:
                self.logging_service.log_error("audit_space", e, {
                    "space_path": request.space_path,
                    "campaign": request.campaign,
                })
            return AuditResult.failure_result(f"Error inesperado durante la auditoría: {e}")

    def _run_single(self, request: AuditRequest, name: str) -> AuditResult:
        space = self.space_repository.load(request.space_path, validate=not request.force)
        config = AuditConfig.from_settings(request.mode, request.seed)
        report = SpaceAuditor(space, config, name).audit(request.propositions)
        return AuditResult.success_result(0.0, report=report)

    def _run_campaign(self, request: AuditRequest) -> AuditResult:
        base_seed = request.seed if request.seed is not None else 0
        config = CampaignConfig.from_settings(base_seed, request.workers, request.propositions)
        audit_config = AuditConfig.from_settings(request.mode, base_seed)
        if self.logging_service:
            self.logging_service.log_info("Iniciando campaña", {
                "members": len(config.members()),
                "workers": config.workers,
            })
        campaign = AuditCampaign(config, audit_config).run()
        for entry in campaign.errors:
            if self.logging_service:
                self.logging_service.log_warning(f"Miembro {entry.name} no auditado: {entry.error}")
        return AuditResult.success_result(0.0, campaign=campaign)
