"""
Caso de uso: Analizar un espacio existente.

Carga un espacio desde su archivo y ejecuta una de las consultas de
análisis: validación, clases de equivalencia, conectivas o estructura.
"""

from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any, List, Optional

from ...core.models import Space, Subset
from ...core.services.connectives import ConnectiveEngine, TernaryVerdict, ZMode, meet
from ...core.services.equivalence import EquivalenceAnalyzer
from ...core.services.structure import StructureAnalyzer
from ...core.rules import default_validator
from ...shared.exceptions import CSpaceError, InvalidArgumentError, SpaceValidationError
from ..ports import LoggingService, SpaceRepository


class AnalysisKind(Enum):
    """Consultas disponibles sobre un espacio."""
    VALIDATE = "validate"
    CLASSES = "classes"
    NEGATE = "negate"
    IMPLIES = "implies"
    JOIN = "join"
    MEET = "meet"
    LUB = "lub"
    MINIMAL_INCONSISTENT = "minimal-inconsistent"
    DETECT_BOOLEAN = "detect-boolean"


# Argumentos obligatorios por consulta
_REQUIRED_ARGUMENTS = {
    AnalysisKind.NEGATE: ("set_labels",),
    AnalysisKind.IMPLIES: ("lhs", "rhs"),
    AnalysisKind.MEET: ("lhs", "rhs"),
    AnalysisKind.JOIN: ("x", "y"),
    AnalysisKind.LUB: ("x", "y"),
}


def split_labels(text: Optional[str]) -> List[str]:
    """Separa una lista de etiquetas por comas; los elementos vacíos se ignoran."""
    if text is None:
        return []
    return [label.strip() for label in text.split(",") if label.strip()]


@dataclass(frozen=True)
class ImplicationQuery:
    lhs: Subset
    rhs: Subset
    verdict: TernaryVerdict
    mode: ZMode


@dataclass(frozen=True)
class MeetQuery:
    lhs: Subset
    rhs: Subset
    meet: Subset


@dataclass
class AnalysisRequest:
    """Solicitud de análisis de un espacio."""
    space_path: str
    kind: AnalysisKind
    set_labels: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    x: Optional[str] = None
    y: Optional[str] = None
    mode: Optional[str] = None
    max_size: Optional[int] = None
    allow_partial: bool = False
    force: bool = False

    def validate(self) -> List[str]:
        """Valida la solicitud de análisis."""
        errors = []

        if not self.space_path or not self.space_path.strip():
            errors.append("La ruta del espacio es requerida")

        for name in _REQUIRED_ARGUMENTS.get(self.kind, ()):
            if getattr(self, name) is None:
                errors.append(f"La consulta {self.kind.value} requiere --{name.replace('_labels', '')}")

        for name in ("x", "y"):
            value = getattr(self, name)
            if value is not None and len(split_labels(value)) != 1:
                errors.append(f"--{name} debe nombrar exactamente un punto")

        if self.max_size is not None and self.max_size < 0:
            errors.append("max_size no puede ser negativo")

        return errors


@dataclass
class AnalysisResult:
    """Resultado del análisis."""
    success: bool
    kind: AnalysisKind
    space: Optional[Space]
    payload: Any
    analysis_time: float
    message: str
    error: Optional[CSpaceError] = None

    @classmethod
    def success_result(cls, kind: AnalysisKind, space: Space, payload: Any,
                       analysis_time: float) -> 'AnalysisResult':
        """Crea un resultado exitoso."""
        return cls(
            success=True,
            kind=kind,
            space=space,
            payload=payload,
            analysis_time=analysis_time,
            message="Análisis completado exitosamente",
        )

    @classmethod
    def failure_result(cls, kind: AnalysisKind, message: str, error: Optional[CSpaceError] = None,
                       space: Optional[Space] = None, payload: Any = None) -> 'AnalysisResult':
        """Crea un resultado de fallo; payload puede conservar datos parciales (p. ej. el reporte de validación)."""
        return cls(
            success=False,
            kind=kind,
            space=space,
            payload=payload,
            analysis_time=0.0,
            message=message,
            error=error,
        )


class AnalyzeSpaceUseCase:
    """
    Caso de uso para consultar un espacio guardado.

    Cada ejecución carga el espacio, construye el analizador que la consulta
    necesita y devuelve el objeto de dominio resultante; la presentación se
    encarga de serializarlo.
    """

    def __init__(self,
                 space_repository: SpaceRepository,
                 logging_service: Optional[LoggingService] = None):
        self.space_repository = space_repository
        self.logging_service = logging_service

    def execute(self, request: AnalysisRequest) -> AnalysisResult:
        """
        Ejecuta la consulta pedida.

        Args:
            request: Solicitud de análisis

        Returns:
            AnalysisResult: Resultado con el objeto de dominio en payload
        """
        start_time = datetime.now()

        try:
            # 1. Validar solicitud
            errors = request.validate()
            if errors:
                raise InvalidArgumentError("Solicitud inválida: " + "; ".join(errors))
            mode = ZMode.parse(request.mode) if request.mode else None

            # 2. Cargar espacio; validate recibe el espacio tal cual para reportarlo
            strict = not request.force and request.kind is not AnalysisKind.VALIDATE
            space = self.space_repository.load(request.space_path, validate=strict)

            # 3. Ejecutar la consulta
            if request.kind is AnalysisKind.VALIDATE:
                report = default_validator.validate(space)
                if not report.ok:
                    error = SpaceValidationError(f"Espacio inválido: {report.summary()}", report)
                    return AnalysisResult.failure_result(request.kind, str(error), error, space, report)
                payload: Any = report
            else:
                payload = self._run_query(space, request, mode)

            analysis_time = (datetime.now() - start_time).total_seconds()
            if self.logging_service:
                self.logging_service.log_analysis_completed(request.kind.value, analysis_time)
            return AnalysisResult.success_result(request.kind, space, payload, analysis_time)

        except CSpaceError as e:
            if self.logging_service:
                self.logging_service.log_error("analyze_space", e, {
                    "space_path": request.space_path,
                    "kind": request.kind.value,
                })
            return AnalysisResult.failure_result(request.kind, str(e), e)
        except Exception as e:
            if self.logging_service:
                self.logging_service.log_error("analyze_space", e, {
                    "space_path": request.space_path,
                    "kind": request.kind.value,
                })
            return AnalysisResult.failure_result(
                request.kind, f"Error inesperado durante el análisis: {e}"
            )

    def _run_query(self, space: Space, request: AnalysisRequest, mode: Optional[ZMode]) -> Any:
        kind = request.kind

        if kind is AnalysisKind.CLASSES:
            return EquivalenceAnalyzer(space).quotient(request.max_size)
        if kind is AnalysisKind.MINIMAL_INCONSISTENT:
            return StructureAnalyzer(space).minimal_inconsistent_sets(request.allow_partial)
        if kind is AnalysisKind.DETECT_BOOLEAN:
            return StructureAnalyzer(space).detect_boolean()
        if kind is AnalysisKind.MEET:
            lhs, rhs = self._subset(space, request.lhs), self._subset(space, request.rhs)
            return MeetQuery(lhs, rhs, meet(lhs, rhs))

        engine = self._engine(space, mode)
        if kind is AnalysisKind.NEGATE:
            return engine.find_negations(self._subset(space, request.set_labels))
        if kind is AnalysisKind.IMPLIES:
            lhs, rhs = self._subset(space, request.lhs), self._subset(space, request.rhs)
            return ImplicationQuery(lhs, rhs, engine.implies(lhs, rhs), engine.mode)
        if kind is AnalysisKind.JOIN:
            return engine.join_search(space.point(request.x.strip()), space.point(request.y.strip()))
        if kind is AnalysisKind.LUB:
            return engine.lub_check(space.point(request.x.strip()), space.point(request.y.strip()))
        raise InvalidArgumentError(f"Consulta desconocida: {kind.value}")

    @staticmethod
    def _subset(space: Space, labels: Optional[str]) -> Subset:
        return space.subset(split_labels(labels))

    @staticmethod
    def _engine(space: Space, mode: Optional[ZMode]) -> ConnectiveEngine:
        if mode is None:
            from ...infrastructure.config.settings import get_default_z_mode
            mode = ZMode.parse(get_default_z_mode())
        return ConnectiveEngine(space, mode)
