"""
Configuración del sistema de espacios de consistencia.

Este módulo proporciona una interfaz unificada para acceder a toda la configuración
del sistema, incluyendo valores por defecto y validaciones.
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from ...shared.exceptions import ConfigurationError
from .constants import (
    AUDIT_LIMITS,
    BUILDER_LIMITS,
    CAMPAIGN_DEFAULTS,
    DEFAULT_Z_MODE,
    GENERATION_LIMITS,
    HARD_MAX_POINTS,
    LOGGING_CONFIG,
    LOG_LEVELS,
    MAX_POINTS,
    Z_MODES,
)

logger = logging.getLogger(__name__)


class Settings:
    """
    Clase principal de configuración del sistema.

    Maneja la carga de configuración desde múltiples fuentes:
    - Valores por defecto (constants.py)
    - Archivo de configuración JSON
    - Variables de entorno
    """

    def __init__(self, config_file: Optional[str] = None, environ: Optional[Dict[str, str]] = None,
                 deferred: bool = False):
        """
        Inicializa la configuración.

        Args:
            config_file: Ruta al archivo de configuración personalizado (opcional)
            environ: Entorno a consultar (por defecto os.environ)
            deferred: Si es True, una configuración incoherente no lanza al
                construir: se conservan los valores por defecto y el error
                queda pendiente hasta ensure_valid()
        """
        self._config_data: Dict[str, Any] = {}
        self._config_file = config_file
        self._environ = os.environ if environ is None else environ
        self.load_error: Optional[ConfigurationError] = None
        try:
            self._load_configuration()
        except ConfigurationError as e:
            if not deferred:
                raise
            logger.error("%s; se usan los valores por defecto", e)
            self.load_error = e
            self._load_defaults()

    def ensure_valid(self):
        """
        Lanza el error de carga pendiente, si lo hay.

        Raises:
            ConfigurationError: Si la configuración cargada era incoherente
        """
        if self.load_error is not None:
            raise self.load_error

    def _load_configuration(self):
        """Carga la configuración desde todas las fuentes disponibles."""
        # 1. Cargar valores por defecto
        self._load_defaults()

        # 2. Cargar desde archivo de configuración si existe
        if self._config_file and Path(self._config_file).exists():
            self._load_from_file(self._config_file)

        # 3. Cargar desde variables de entorno
        self._load_from_environment()

        # 4. Validar configuración
        self._validate_configuration()

    def _load_defaults(self):
        """Carga los valores por defecto desde constants.py."""
        self._config_data = copy.deepcopy({
            "limits": dict(BUILDER_LIMITS, max_points=MAX_POINTS),
            "generation": GENERATION_LIMITS,
            "audit": dict(AUDIT_LIMITS, default_z_mode=DEFAULT_Z_MODE),
            "campaign": CAMPAIGN_DEFAULTS,
            "logging": LOGGING_CONFIG,
        })

    def _load_from_file(self, config_file: str):
        """Carga configuración desde archivo JSON."""
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                file_config = json.load(f)
        except (OSError, ValueError) as e:
            logger.warning("No se pudo cargar el archivo de configuración %s: %s", config_file, e)
            return

        self._deep_update(self._config_data, file_config)

    def _load_from_environment(self):
        """Carga configuración desde variables de entorno."""
        env_mappings = {
            "CSPACE_MAX_POINTS": ("limits", "max_points", int),
            "CSPACE_LOG_LEVEL": ("logging", "level", str),
            "CSPACE_WORKERS": ("audit", "workers", int),
            "CSPACE_Z_MODE": ("audit", "default_z_mode", str),
        }

        for env_var, (section, key, var_type) in env_mappings.items():
            env_value = self._environ.get(env_var)
            if env_value is None:
                continue
            try:
                value = var_type(env_value.strip())
            except ValueError:
                logger.warning("Valor inválido para %s: %r", env_var, env_value)
                continue
            self._config_data.setdefault(section, {})[key] = value

    def _validate_configuration(self):
        """Valida que la configuración sea coherente."""
        errors = []

        cap = self._config_data["limits"]["max_points"]
        if cap < 1:
            errors.append("El límite exhaustivo debe ser al menos 1 punto")
        if cap > HARD_MAX_POINTS:
            errors.append(f"El límite exhaustivo no puede superar {HARD_MAX_POINTS} puntos")

        if self._config_data["audit"]["bounded_set_size"] < 1:
            errors.append("bounded_set_size debe ser al menos 1")

        if self._config_data["audit"]["workers"] < 1:
            errors.append("Debe haber al menos 1 worker de auditoría")

        if self._config_data["audit"]["default_z_mode"] not in Z_MODES:
            errors.append(f"Modo z desconocido: {self._config_data['audit']['default_z_mode']}")

        if str(self._config_data["logging"]["level"]).upper() not in LOG_LEVELS:
            errors.append(f"Nivel de log desconocido: {self._config_data['logging']['level']}")

        if errors:
            raise ConfigurationError("Errores en la configuración: " + "; ".join(errors))

    def _deep_update(self, base_dict: dict, update_dict: dict):
        """Actualiza recursivamente un diccionario."""
        for key, value in update_dict.items():
            if key in base_dict and isinstance(base_dict[key], dict) and isinstance(value, dict):
                self._deep_update(base_dict[key], value)
            else:
                base_dict[key] = value

    # =====================================================================
    # Métodos de acceso a configuración específica
    # =====================================================================

    def get_limits_config(self) -> Dict[str, Any]:
        """Obtiene los límites de análisis y de constructores."""
        return self._config_data["limits"]

    def get_audit_config(self) -> Dict[str, Any]:
        """Obtiene la configuración de auditoría."""
        return self._config_data["audit"]

    def get_campaign_config(self) -> Dict[str, Any]:
        """Obtiene el corpus por defecto de campañas."""
        return self._config_data["campaign"]

    def get_logging_config(self) -> Dict[str, Any]:
        """Obtiene la configuración de logging."""
        return self._config_data["logging"]

    @property
    def max_points(self) -> int:
        """Límite exhaustivo vigente."""
        return self._config_data["limits"]["max_points"]

    # =====================================================================
    # Métodos de configuración dinámica
    # =====================================================================

    def update_setting(self, path: str, value: Any):
        """
        Actualiza un valor de configuración dinámicamente y revalida.

        Args:
            path: Ruta del setting en formato "section.key"
            value: Nuevo valor
        """
        keys = path.split('.')
        current = self._config_data

        for key in keys[:-1]:
            current = current.setdefault(key, {})

        current[keys[-1]] = value
        self._validate_configuration()

    def get_setting(self, path: str, default: Any = None) -> Any:
        """
        Obtiene un valor de configuración por ruta.

        Args:
            path: Ruta del setting en formato "section.key"
            default: Valor por defecto si no se encuentra

        Returns:
            Valor de configuración o default
        """
        current = self._config_data
        try:
            for key in path.split('.'):
                current = current[key]
            return current
        except (KeyError, TypeError):
            return default

    def get_all_config(self) -> Dict[str, Any]:
        """Obtiene toda la configuración como diccionario."""
        return copy.deepcopy(self._config_data)


# =====================================================================
# Instancia global de configuración
# =====================================================================

settings = Settings(os.environ.get("CSPACE_CONFIG"), deferred=True)


def get_max_points() -> int:
    """Obtiene el límite exhaustivo de puntos."""
    return settings.max_points


def get_default_z_mode() -> str:
    """Obtiene el modo z por defecto."""
    return settings.get_audit_config()["default_z_mode"]


