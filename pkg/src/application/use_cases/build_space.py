"""
Caso de uso: Construir un espacio.

Coordina la lectura de fórmulas (si corresponde), el constructor elegido y
el guardado opcional del espacio resultante.
"""

from dataclasses import dataclass
from datetime import datetime
from typing import List, Optional

from ...core.models import Space
from ...core.services.builders import BuilderConfig, BuilderKind, SpaceBuilder
from ...shared.exceptions import CSpaceError, InvalidArgumentError
from ..ports import FormulaSource, LoggingService, SpaceRepository


@dataclass
class BuildRequest:
    """Solicitud de construcción de un espacio."""
    kind: BuilderKind
    n_vars: Optional[int] = None
    formulas_path: Optional[str] = None
    num_points: Optional[int] = None
    num_maximal: Optional[int] = None
    seed: int = 0
    output_path: Optional[str] = None

    @property
    def builder_config(self) -> BuilderConfig:
        return BuilderConfig(
            kind=self.kind,
            n_vars=self.n_vars,
            formulas=self.formulas_path,
            num_points=self.num_points,
            num_maximal=self.num_maximal,
            seed=self.seed,
        )

    def validate(self) -> List[str]:
        """Valida la solicitud de construcción."""
        errors = []
        if self.kind is BuilderKind.EXPLICIT:
            errors.append("El constructor explícito no está disponible desde esta solicitud")
        if self.output_path is not None and not self.output_path.strip():
            errors.append("La ruta de salida no puede estar vacía")
        return errors


@dataclass
class BuildResult:
    """Resultado de la construcción."""
    success: bool
    space: Optional[Space]
    build_time: float
    saved_path: Optional[str]
    message: str
    error: Optional[CSpaceError] = None

    @classmethod
    def success_result(cls, space: Space, build_time: float,
                       saved_path: Optional[str] = None) -> 'BuildResult':
        """Crea un resultado exitoso."""
        return cls(
            success=True,
            space=space,
            build_time=build_time,
            saved_path=saved_path,
            message="Espacio construido exitosamente",
        )

    @classmethod
    def failure_result(cls, message: str, error: Optional[CSpaceError] = None) -> 'BuildResult':
        """Crea un resultado de fallo."""
        return cls(
            success=False,
            space=None,
            build_time=0.0,
            saved_path=None,
            message=message,
            error=error,
        )


class BuildSpaceUseCase:
    """
    Caso de uso para construir espacios con cualquiera de los constructores.
    """

    def __init__(self,
                 space_repository: SpaceRepository,
                 formula_source: FormulaSource,
                 logging_service: Optional[LoggingService] = None,
                 builder: Optional[SpaceBuilder] = None):
        """
        Inicializa el caso de uso.

        Args:
            space_repository: Repositorio donde se guarda el espacio
            formula_source: Lector de listas de fórmulas
            logging_service: Servicio de logging (opcional)
            builder: Constructor a usar (por defecto uno con los límites configurados)
        """
        self.space_repository = space_repository
        self.formula_source = formula_source
        self.logging_service = logging_service
        self.builder = builder or SpaceBuilder()

    def execute(self, request: BuildRequest) -> BuildResult:
        """
        Ejecuta la construcción.

        Args:
            request: Solicitud de construcción

        Returns:
            BuildResult: Espacio construido, o el error que lo impidió
        """
        start_time = datetime.now()

        try:
            # 1. Validar solicitud y parámetros del constructor
            errors = request.validate() + request.builder_config.validate(self.builder.limits)
            if errors:
                raise InvalidArgumentError("Solicitud inválida: " + "; ".join(errors))

            # 2. Cargar fórmulas si el constructor las necesita
            formulas = None
            if request.kind is BuilderKind.FORMULAS:
                formulas = self.formula_source.load_formulas(request.formulas_path)

            # 3. Construir
            space = self.builder.build(request.builder_config, formulas)

            # 4. Guardar si se pidió destino
            if request.output_path:
                self.space_repository.save(space, request.output_path)

            build_time = (datetime.now() - start_time).total_seconds()
            if self.logging_service:
                self.logging_service.log_build_completed(
                    request.kind.value, space.size, len(space.maximal), build_time
                )
            return BuildResult.success_result(space, build_time, request.output_path)

        except CSpaceError as e:
            if self.logging_service:
                self.logging_service.log_error("build_space", e, {"kind": request.kind.value})
            return BuildResult.failure_result(str(e), e)
        except Exception as e:
            if self.logging_service:
                self.logging_service.log_error("build_space", e, {"kind": request.kind.value})
            return BuildResult.failure_result(f"Error inesperado durante la construcción: {e}")
