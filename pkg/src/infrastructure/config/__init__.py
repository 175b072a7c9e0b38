"""
Infrastructure Config - Configuración del sistema.

Este paquete contiene toda la configuración del sistema,
incluyendo constantes, configuraciones y utilidades.
"""

from .constants import (
    AUDIT_LIMITS,
    BUILDER_LIMITS,
    CAMPAIGN_DEFAULTS,
    DEFAULT_Z_MODE,
    EXIT_CODES,
    GENERATION_LIMITS,
    JSON_INDENT,
    LOGGING_CONFIG,
    MAX_POINTS,
    SPACE_FILE_KEYS,
    Z_MODES,
)
from .settings import (
    Settings,
    get_default_z_mode,
    get_max_points,
    settings,
)

__all__ = [
    # Constants
    'AUDIT_LIMITS',
    'BUILDER_LIMITS',
    'CAMPAIGN_DEFAULTS',
    'DEFAULT_Z_MODE',
    'EXIT_CODES',
    'GENERATION_LIMITS',
    'JSON_INDENT',
    'LOGGING_CONFIG',
    'MAX_POINTS',
    'SPACE_FILE_KEYS',
    'Z_MODES',

    # Settings
    'Settings',
    'get_default_z_mode',
    'get_max_points',
    'settings',
]
