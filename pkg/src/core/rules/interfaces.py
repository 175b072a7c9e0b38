"""
Interfaces y contratos para las reglas de dominio.

Este módulo define las interfaces abstractas que deben implementar
las reglas estructurales y los validadores de espacios.
"""

from abc import ABC, abstractmethod
from typing import List

from ..models.space import Space, ValidationReport, Violation


class SpaceRule(ABC):
    """
    Interfaz base para reglas estructurales.

    Cada regla evalúa un invariante del espacio (un axioma o una condición
    de representación) y devuelve las violaciones con su testigo.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Nombre identificativo de la regla."""
        pass

    @property
    @abstractmethod
    def description(self) -> str:
        """Descripción de lo que evalúa la regla."""
        pass

    @abstractmethod
    def check(self, space: Space) -> List[Violation]:
        """
        Evalúa la regla sobre un espacio.

        Args:
            space: Espacio a evaluar

        Returns:
            List[Violation]: Violaciones encontradas (vacía si se cumple)
        """
        pass


class SpaceValidator(ABC):
    """
    Interfaz base para validadores de espacio completo.

    Los validadores combinan reglas y consolidan sus violaciones
    en un ValidationReport.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Nombre identificativo del validador."""
        pass

    @abstractmethod
    def validate(self, space: Space) -> ValidationReport:
        """
        Valida un espacio completo.

        Args:
            space: Espacio a validar

        Returns:
            ValidationReport: Reporte con todas las violaciones
        """
        pass
