"""
Configuración de logging y adaptador del puerto LoggingService.

stdout queda reservado para la salida de los comandos; todo registro va a stderr.
"""

import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from ...application.ports.interfaces import LoggingService
from ..config.settings import Settings

ROOT_LOGGER = "src"
_HANDLER_NAME = "cspace-stderr"


def configure_logging(settings: Settings, level: Optional[str] = None,
                      stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Instala un único handler de stderr sobre el logger raíz del paquete.

    Llamarla varias veces reemplaza el handler anterior en lugar de duplicarlo.

    Args:
        settings: Configuración con logging.level, log_format y date_format
        level: Nivel que sustituye al configurado (por ejemplo desde -v)
        stream: Flujo de destino (por defecto sys.stderr)
    """
    config = settings.get_logging_config()
    logger = reset_logging()

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(config["log_format"], config["date_format"]))
    logger.addHandler(handler)
    logger.setLevel(str(level or config["level"]).upper())
    return logger


class StandardLoggingService(LoggingService):
    """Implementación de LoggingService sobre el módulo logging."""

    def __init__(self, name: str = "src.application"):
        self._logger = logging.getLogger(name)

    def log_build_completed(self, kind: str, points: int, maximal: int, elapsed: float) -> None:
        self._logger.info("Espacio %s construido: %d puntos, %d maximales (%.3fs)",
                          kind, points, maximal, elapsed)

    def log_analysis_completed(self, operation: str, elapsed: float) -> None:
        self._logger.info("Análisis %s completado (%.3fs)", operation, elapsed)

    def log_audit_completed(self, name: str, refuted: List[str], elapsed: float) -> None:
        refuted_text = ", ".join(refuted) if refuted else "ninguna"
        self._logger.info("Auditoría de %s completada; refutadas: %s (%.3fs)", name, refuted_text, elapsed)

    def log_info(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self._logger.info(self._with_context(message, context))

    def log_warning(self, message: str, context: Optional[Dict[str, Any]] = None) -> None:
        self._logger.warning(self._with_context(message, context))

    def log_error(self, operation: str, error: Exception,
                  context: Optional[Dict[str, Any]] = None) -> None:
        self._logger.error(self._with_context(f"Error en {operation}: {error}", context))

    @staticmethod
    def _with_context(message: str, context: Optional[Dict[str, Any]]) -> str:
        if not context:
            return message
        details = ", ".join(f"{key}={context[key]!r}" for key in sorted(context))
        return f"{message} [{details}]"


def reset_logging() -> logging.Logger:
    """Retira el handler instalado por configure_logging, si lo hay."""
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        if handler.get_name() == _HANDLER_NAME:
            logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    return logger
