"""
Interfaces y contratos para la capa de aplicación.

Este módulo define todas las interfaces que la capa de aplicación
necesita para interactuar con la infraestructura: archivos de espacio,
listas de fórmulas, salida de reportes y logging.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from ...core.models import Formula, Space


# =====================================================================
# Repository Interfaces
# =====================================================================

class SpaceRepository(ABC):
    """Interfaz para el repositorio de espacios."""

    @abstractmethod
    def save(self, space: Space, path: str) -> None:
        """
        Guarda un espacio.

        Args:
            space: Espacio a guardar
            path: Destino
        """
        pass

    @abstractmethod
    def load(self, path: str, validate: bool = True) -> Space:
        """
        Carga un espacio.

        Args:
            path: Origen
            validate: Si es False, devuelve el espacio aunque viole los axiomas

        Raises:
            SpaceFileError: Documento mal formado
            UnknownLabelError: Un conjunto referencia una etiqueta inexistente
            SpaceValidationError: El espacio viola los axiomas y validate es True
        """
        pass

    @abstractmethod
    def exists(self, path: str) -> bool:
        """Verifica si existe un espacio en la ruta dada."""
        pass


class FormulaSource(ABC):
    """Interfaz para la lectura de listas de fórmulas etiquetadas."""

    @abstractmethod
    def load_formulas(self, path: str) -> List[Tuple[str, Formula]]:
        """
        Lee una lista de fórmulas.

        Returns:
            List[Tuple[str, Formula]]: Pares (etiqueta, fórmula) en orden de aparición
        """
        pass


# =====================================================================
# Output Interfaces
# =====================================================================

class ReportWriter(ABC):
    """Interfaz para la escritura de la salida de un comando."""

    @abstractmethod
    def write(self, text: str, destination: Optional[str] = None) -> None:
        """
        Escribe el texto completo de una vez.

        Args:
            text: Contenido
            destination: Ruta de archivo, o None para la salida estándar
        """
        pass


# =====================================================================
# Service Interfaces
# =====================================================================

class LoggingService(ABC):
    """Interfaz para el servicio de logging."""

    @abstractmethod
    def log_build_completed(self, kind: str, points: int, maximal: int, elapsed: float) -> None:
        """Registra la construcción de un espacio."""
        pass

    @abstractmethod
    def log_analysis_completed(self, operation: str, elapsed: float) -> None:
        """Registra la finalización de un análisis."""
        pass

    @abstractmethod
    def log_audit_completed(self, name: str, refuted: List[str], elapsed: float) -> None:
        """Registra la finalización de una auditoría."""
        pass

    @abstractmethod
    def log_info(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        """Registra información general."""
        pass

    @abstractmethod
    def log_warning(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        """Registra una advertencia."""
        pass

    @abstractmethod
    def log_error(self, operation: str, error: Exception,
                  context: Optional[Dict[str, Any]] = None) -> None:
        """Registra un error."""
        pass
