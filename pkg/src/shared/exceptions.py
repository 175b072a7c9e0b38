"""
Jerarquía de excepciones del sistema de espacios de consistencia.

Todas las excepciones derivan de CSpaceError. Las dos familias principales
determinan el código de salida de la CLI:

- UsageError (código 2): el usuario pidió algo mal formado.
- DomainError (código 1): la petición es correcta pero el dominio la rechaza
  (espacio inválido, límite exhaustivo superado, fórmula insatisfacible...).
"""

from typing import Any, Optional


class CSpaceError(Exception):
    """Excepción base del paquete."""

    exit_code: int = 1


# =====================================================================
# Errores de uso
# =====================================================================

class UsageError(CSpaceError):
    """Entrada de usuario mal formada."""

    exit_code = 2


class UnknownLabelError(UsageError):
    """Se referenció una etiqueta de punto que no existe en el espacio."""

    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Etiqueta desconocida: {label!r}")


class WidthMismatchError(UsageError):
    """Un subconjunto no tiene el ancho del espacio al que se aplica."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Ancho de subconjunto incorrecto: se esperaba {expected}, se recibió {actual}"
        )


class InvalidArgumentError(UsageError):
    """Parámetro fuera de rango (por ejemplo, número de variables de un constructor)."""


# =====================================================================
# Errores de dominio
# =====================================================================

class DomainError(CSpaceError):
    """La petición es válida pero el dominio no puede satisfacerla."""

    exit_code = 1


class ConfigurationError(DomainError):
    """La configuración cargada es incoherente."""


class SpaceValidationError(DomainError):
    """
    El espacio viola uno o más axiomas.

    Attributes:
        report: ValidationReport con todas las violaciones encontradas
    """

    def __init__(self, message: str, report: Any):
        self.report = report
        super().__init__(message)


class CapExceededError(DomainError):
    """Una operación exhaustiva superaría el límite configurado de puntos."""

    def __init__(self, operation: str, size: int, cap: int, proposition: Optional[str] = None):
        self.operation = operation
        self.size = size
        self.cap = cap
        self.proposition = proposition
        target = f"{operation} ({proposition})" if proposition else operation
        super().__init__(
            f"{target}: el espacio tiene {size} puntos y el límite exhaustivo es {cap}"
        )


class FormulaSyntaxError(DomainError):
    """Error de sintaxis al analizar una fórmula; incluye la posición (base 0) y, en archivos, la línea."""

    def __init__(self, message: str, position: int, text: str = "", line: Optional[int] = None):
        self.reason = message
        self.position = position
        self.text = text
        self.line = line
        where = f"línea {line}, posición {position}" if line is not None else f"posición {position}"
        super().__init__(f"{message} ({where})")


class UnknownVariableError(DomainError):
    """La fórmula usa una variable ausente de la lista de variables pedida."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Variable desconocida en la fórmula: {name!r}")


class FormulaSizeError(DomainError):
    """Demasiadas variables para una tabla de verdad."""


class GenerationError(DomainError):
    """El generador aleatorio no pudo producir un espacio válido."""


class SpaceFileError(DomainError):
    """Archivo de espacio o de fórmulas mal formado."""


class InvariantViolationError(DomainError):
    """Una ley interna que debería cumplirse siempre ha fallado."""
