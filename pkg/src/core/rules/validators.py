"""
Validadores de espacio completo.

Este módulo contiene el validador compuesto que aplica las reglas
estructurales y consolida sus violaciones en un ValidationReport.
"""

import logging
from typing import Dict, List, Optional

from ..models.space import Space, ValidationReport
from .axioms import DEFAULT_AXIOM_RULES
from .interfaces import SpaceRule, SpaceValidator

logger = logging.getLogger(__name__)


class AxiomValidator(SpaceValidator):
    """
    Validador compuesto que combina múltiples reglas.

    Ejecuta cada regla en orden y conserva el orden de aparición de las
    violaciones para que el reporte sea determinista.
    """

    def __init__(self, rules: Optional[List[SpaceRule]] = None):
        """
        Inicializa el validador.

        Args:
            rules: Reglas a aplicar. Si es None, usa las reglas por defecto.
        """
        self.rules: Dict[str, SpaceRule] = {}
        for rule in DEFAULT_AXIOM_RULES if rules is None else rules:
            self.add_rule(rule)

    @property
    def name(self) -> str:
        return "axiom_validator"

    def validate(self, space: Space) -> ValidationReport:
        """
        Ejecuta todas las reglas y consolida los resultados.

        Args:
            space: Espacio a validar

        Returns:
            ValidationReport: Reporte con todas las violaciones
        """
        report = ValidationReport()
        for rule in self.rules.values():
            report.violations.extend(rule.check(space))
        logger.debug("Validación de %r: %d violaciones", space, len(report.violations))
        return report

    def add_rule(self, rule: SpaceRule):
        """Añade una regla al validador."""
        self.rules[rule.name] = rule

    def remove_rule(self, rule_name: str) -> bool:
        """
        Elimina una regla del validador.

        Returns:
            bool: True si se eliminó, False si no existía
        """
        if rule_name in self.rules:
            del self.rules[rule_name]
            return True
        return False

    def list_rules(self) -> List[str]:
        """Retorna la lista de nombres de reglas activas."""
        return list(self.rules.keys())


# Instancia global del validador estándar
default_validator = AxiomValidator()


def validate(space: Space) -> ValidationReport:
    """Valida un espacio con el validador estándar."""
    return default_validator.validate(space)
