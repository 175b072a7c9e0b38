"""
Persistencia - archivos de espacio y listas de fórmulas.
"""

from .formula_file import FormulaFileSource, parse_formula_lines
from .json_space_repository import JsonSpaceRepository

__all__ = [
    'FormulaFileSource',
    'JsonSpaceRepository',
    'parse_formula_lines',
]
