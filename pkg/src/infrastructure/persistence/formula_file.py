"""
Lectura de listas de fórmulas.

Una fórmula por línea; `#` inicia un comentario hasta el final de la línea y
las líneas en blanco se ignoran. La forma `etiqueta: fórmula` fija la etiqueta
del punto; sin ella, la etiqueta es el texto de la fórmula recortado.
"""

import logging
from typing import Iterable, List, Tuple

from ...application.ports.interfaces import FormulaSource
from ...core.models import Formula
from ...core.services.formulas import parse
from ...shared.exceptions import FormulaSyntaxError, SpaceFileError

logger = logging.getLogger(__name__)

LABEL_SEPARATOR = ":"
COMMENT_MARK = "#"


def parse_formula_lines(lines: Iterable[str]) -> List[Tuple[str, Formula]]:
    """
    Analiza las líneas de una lista de fórmulas.

    Raises:
        FormulaSyntaxError: Con el número de línea (base 1)
        SpaceFileError: Etiqueta vacía
    """
    formulas: List[Tuple[str, Formula]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split(COMMENT_MARK, 1)[0].strip()
        if not line:
            continue
        if LABEL_SEPARATOR in line:
            label, source = (part.strip() for part in line.split(LABEL_SEPARATOR, 1))
            if not label:
                raise SpaceFileError(f"Línea {lineno}: etiqueta vacía antes de ':'")
        else:
            label, source = line, line
        try:
            formula = parse(source)
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(e.reason, e.position, source, line=lineno) from e
        formulas.append((label, formula))
    return formulas


class FormulaFileSource(FormulaSource):
    """Implementación de FormulaSource sobre archivos de texto UTF-8."""

    def load_formulas(self, path: str) -> List[Tuple[str, Formula]]:
        try:
            with open(path, "r", encoding="utf-8") as f:
                formulas = parse_formula_lines(f)
        except OSError as e:
            raise SpaceFileError(f"No se pudo leer el archivo de fórmulas {path}: {e}") from e
        logger.debug("%d fórmulas leídas de %s", len(formulas), path)
        return formulas
