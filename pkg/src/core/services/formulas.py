"""
Servicio de fórmulas - Dominio puro.

Analizador sintáctico descendente recursivo para fórmulas proposicionales y
oráculo de satisfacibilidad por tablas de verdad. Todas las instancias de
interés tienen como mucho 16 variables, de modo que la tabla completa cabe en
un entero de 2^16 bits y la satisfacibilidad de una conjunción se reduce a un
AND de máscaras.

Gramática (de menor a mayor precedencia):

    iff     := implies ('<->' implies)*      asociativo a la izquierda
    implies := or ('->' implies)?            asociativo a la derecha
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := ('!' | '~') unary | atom
    atom    := IDENT | '(' iff ')'
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ...shared.exceptions import FormulaSizeError, FormulaSyntaxError, UnknownVariableError
from ...shared.utils import full_mask
from ..models.formula import And, Formula, Iff, Implies, Not, Or, TruthTable, Var

logger = logging.getLogger(__name__)

MAX_TRUTH_TABLE_VARS = 16

_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op><->|->|[!~&|()]))")


@dataclass(frozen=True)
class Token:
    """Token léxico con su posición en el texto fuente."""
    kind: str       # "ident", "op" o "end"
    value: str
    position: int


def tokenize(text: str) -> List[Token]:
    """
    Divide el texto en tokens.

    Raises:
        FormulaSyntaxError: Ante un carácter que no pertenece a la gramática
    """
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        if not match:
            offending = position + (len(text[position:]) - len(text[position:].lstrip()))
            raise FormulaSyntaxError(f"Carácter inesperado {text[offending]!r}", offending, text)
        kind = "ident" if match.group("ident") is not None else "op"
        value = match.group(kind)
        tokens.append(Token(kind, value, match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class FormulaParser:
    """Analizador descendente recursivo sobre la lista de tokens."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, *values: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.value in values:
            return self._advance()
        return None

    def _error(self, message: str) -> FormulaSyntaxError:
        token = self.current
        if token.kind == "end":
            return FormulaSyntaxError(f"{message}: fin de entrada inesperado", token.position, self.text)
        return FormulaSyntaxError(f"{message}: token inesperado {token.value!r}", token.position, self.text)

    def parse(self) -> Formula:
        if self.current.kind == "end":
            raise FormulaSyntaxError("Entrada vacía", 0, self.text)
        formula = self._parse_iff()
        if self.current.kind != "end":
            raise self._error("Se esperaba fin de fórmula")
        return formula

    def _parse_iff(self) -> Formula:
        left = self._parse_implies()
        while self._accept("<->"):
            left = Iff(left, self._parse_implies())
        return left

    def _parse_implies(self) -> Formula:
        left = self._parse_or()
        if self._accept("->"):
            return Implies(left, self._parse_implies())
        return left

    def _parse_or(self) -> Formula:
        left = self._parse_and()
        while self._accept("|"):
            left = Or(left, self._parse_and())
        return left

    def _parse_and(self) -> Formula:
        left = self._parse_unary()
        while self._accept("&"):
            left = And(left, self._parse_unary())
        return left

    def _parse_unary(self) -> Formula:
        if self._accept("!", "~"):
            return Not(self._parse_unary())
        return self._parse_atom()

    def _parse_atom(self) -> Formula:
        token = self.current
        if token.kind == "ident":
            self._advance()
            return Var(token.value)
        if self._accept("("):
            inner = self._parse_iff()
            if not self._accept(")"):
                raise self._error("Se esperaba ')'")
            return inner
        raise self._error("Se esperaba variable o '('")


def parse(text: str) -> Formula:
    """
    Analiza una fórmula.

    Args:
        text: Texto fuente

    Returns:
        Formula: AST resultante

    Raises:
        FormulaSyntaxError: Con la posición del error; la entrada vacía es error
    """
    return FormulaParser(text).parse()


# =====================================================================
# Tablas de verdad
# =====================================================================

def collect_variables(formulas: Iterable[Formula]) -> List[str]:
    """Unión ordenada alfabéticamente de las variables de varias fórmulas."""
    names = set()
    for formula in formulas:
        names |= formula.variables()
    return sorted(names)


def variable_mask(index: int, n_vars: int) -> int:
    """Máscara de la variable `index`: bits j con el bit `index` de j activo."""
    width = 1 << n_vars
    block = 1 << index
    mask = full_mask(block) << block
    period = block << 1
    while period < width:
        mask |= mask << period
        period <<= 1
    return mask


def _check_vars(vars: Sequence[str]) -> Tuple[str, ...]:
    ordered = tuple(vars)
    if len(ordered) > MAX_TRUTH_TABLE_VARS:
        raise FormulaSizeError(
            f"Demasiadas variables para una tabla de verdad: {len(ordered)} > {MAX_TRUTH_TABLE_VARS}"
        )
    if len(set(ordered)) != len(ordered):
        raise ValueError("La lista de variables contiene duplicados")
    return ordered


def truth_table(formula: Formula, vars: Sequence[str]) -> TruthTable:
    """
    Calcula la tabla de verdad de una fórmula.

    Args:
        formula: Fórmula a evaluar
        vars: Lista ordenada de variables (debe contener todas las de la fórmula)

    Returns:
        TruthTable: Máscara de 2^n bits

    Raises:
        UnknownVariableError: Si la fórmula usa una variable fuera de `vars`
        FormulaSizeError: Si hay más de 16 variables
    """
    ordered = _check_vars(vars)
    missing = sorted(formula.variables() - set(ordered))
    if missing:
        raise UnknownVariableError(missing[0])

    n_vars = len(ordered)
    top = full_mask(1 << n_vars)
    var_masks = {name: variable_mask(i, n_vars) for i, name in enumerate(ordered)}

    def mask_of(node: Formula) -> int:
        if isinstance(node, Var):
            return var_masks[node.name]
        if isinstance(node, Not):
            return top ^ mask_of(node.operand)
        left, right = mask_of(node.left), mask_of(node.right)
        if isinstance(node, And):
            return left & right
        if isinstance(node, Or):
            return left | right
        if isinstance(node, Implies):
            return (top ^ left) | right
        if isinstance(node, Iff):
            return top ^ (left ^ right)
        raise TypeError(f"Nodo de fórmula desconocido: {type(node).__name__}")

    return TruthTable(ordered, mask_of(formula))


def assignment_of(index: int, vars: Sequence[str]) -> Dict[str, bool]:
    """La asignación j: la variable i vale el bit i de j."""
    return {name: bool(index >> i & 1) for i, name in enumerate(vars)}


def conjunction_mask(formulas: Sequence[Formula], vars: Sequence[str]) -> int:
    """AND de las máscaras; la conjunción vacía es la máscara llena (el 1)."""
    ordered = _check_vars(vars)
    mask = full_mask(1 << len(ordered))
    for formula in formulas:
        mask &= truth_table(formula, ordered).mask
        if not mask:
            break
    return mask


def conjunction_satisfiable(formulas: Sequence[Formula], vars: Sequence[str]) -> bool:
    """
    Indica si la conjunción de las fórmulas es satisfacible.

    Es el criterio de inconsistencia como producto nulo: la conjunción es
    insatisfacible exactamente cuando el AND de las máscaras es cero.
    """
    return conjunction_mask(formulas, vars) != 0
