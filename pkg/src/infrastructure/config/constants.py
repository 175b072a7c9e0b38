"""
Constantes del sistema de espacios de consistencia.

Este módulo contiene todas las constantes utilizadas a lo largo del sistema,
organizadas por categorías para facilitar el mantenimiento.
"""

# =====================================================================
# Límites de análisis exhaustivo
# =====================================================================

# Tamaño máximo del universo para operaciones que recorren 2^|X| subconjuntos
MAX_POINTS = 20

# Cota superior absoluta aceptada para MAX_POINTS
HARD_MAX_POINTS = 24

# Límites por constructor
BUILDER_LIMITS = {
    "max_literal_vars": 10,
    "max_boolean_vars": 3,
    "max_formula_vars": 16,
    "max_random_points": 20,
}

# Reintentos del generador aleatorio hasta cubrir todos los puntos
GENERATION_LIMITS = {
    "max_attempts": 200,
}

# =====================================================================
# Auditoría
# =====================================================================

# Modos de recorrido de z en las condiciones de negación
Z_MODES = ["elements", "subsets"]
DEFAULT_Z_MODE = "subsets"

# Dominio de las variables de conjunto en la auditoría
AUDIT_LIMITS = {
    "full_domain_max_points": 6,   # hasta aquí: todos los subconjuntos
    "bounded_set_size": 3,         # después: tamaño <= 3 más los maximales
    "workers": 1,
}

# Corpus por defecto de una campaña de auditoría
CAMPAIGN_DEFAULTS = {
    "literal_vars": [1, 2, 3],
    "boolean_vars": [1, 2],
    "random_seeds": 50,
    "random_points": [4, 5, 6],
    "random_maximal": 3,
}

# =====================================================================
# Formatos de archivo y salida
# =====================================================================

SPACE_FILE_KEYS = {
    "points": "points",
    "maximal": "maximal_consistent",
    "origin": "origin",
}

# Indentación de toda salida JSON
JSON_INDENT = 2

# =====================================================================
# Configuración de Logging
# =====================================================================

LOG_LEVELS = {
    "DEBUG": 10,
    "INFO": 20,
    "WARNING": 30,
    "ERROR": 40,
    "CRITICAL": 50
}

LOGGING_CONFIG = {
    "level": "WARNING",
    "log_format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "date_format": "%Y-%m-%d %H:%M:%S"
}

# =====================================================================
# Códigos de salida de la CLI
# =====================================================================

EXIT_CODES = {
    "ok": 0,
    "domain_error": 1,
    "usage_error": 2,
}
