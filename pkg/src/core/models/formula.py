"""
Modelo de fórmulas proposicionales.

AST inmutable (Var, Not, And, Or, Implies, Iff) y tablas de verdad como
máscaras de bits. Las fórmulas dan semántica de álgebra de Boole a los
puntos de los espacios construidos a partir de fórmulas.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from ...shared.utils import full_mask, popcount


class Formula:
    """Nodo base del AST."""

    # Precedencia para impresión compacta: mayor = liga más fuerte
    precedence: int = 0

    def variables(self) -> FrozenSet[str]:
        """Variables que aparecen en la fórmula."""
        raise NotImplementedError

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        """Evalúa la fórmula bajo una asignación concreta."""
        raise NotImplementedError

    def __str__(self) -> str:
        return format_compact(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str
    precedence = 5

    def __post_init__(self):
        if not self.name:
            raise ValueError("El nombre de variable no puede estar vacío")

    def variables(self) -> FrozenSet[str]:
        return frozenset((self.name,))

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return assignment[self.name]


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula
    precedence = 4

    def variables(self) -> FrozenSet[str]:
        return self.operand.variables()

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return not self.operand.evaluate(assignment)


@dataclass(frozen=True)
class _Binary(Formula):
    left: Formula
    right: Formula
    symbol = "?"

    def variables(self) -> FrozenSet[str]:
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class And(_Binary):
    symbol = "&"
    precedence = 3

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return self.left.evaluate(assignment) and self.right.evaluate(assignment)


@dataclass(frozen=True)
class Or(_Binary):
    symbol = "|"
    precedence = 2

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return self.left.evaluate(assignment) or self.right.evaluate(assignment)


@dataclass(frozen=True)
class Implies(_Binary):
    symbol = "->"
    precedence = 1

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return (not self.left.evaluate(assignment)) or self.right.evaluate(assignment)


@dataclass(frozen=True)
class Iff(_Binary):
    symbol = "<->"
    precedence = 0

    def evaluate(self, assignment: Dict[str, bool]) -> bool:
        return self.left.evaluate(assignment) == self.right.evaluate(assignment)


@dataclass(frozen=True)
class TruthTable:
    """
    Tabla de verdad de una fórmula sobre una lista ordenada de variables.

    El bit j de `mask` es el valor de la fórmula bajo la asignación j, donde
    la variable i vale el bit i de j. La máscara llena representa la
    constante 1 y la máscara nula la constante 0.
    """
    vars: Tuple[str, ...]
    mask: int

    def __post_init__(self):
        """Validación post-inicialización."""
        if self.mask < 0 or self.mask >> self.width:
            raise ValueError("La máscara excede 2^n bits")

    @property
    def width(self) -> int:
        """Número de asignaciones: 2^n."""
        return 1 << len(self.vars)

    @property
    def is_top(self) -> bool:
        return self.mask == full_mask(self.width)

    @property
    def is_bottom(self) -> bool:
        return self.mask == 0

    @property
    def satisfiable(self) -> bool:
        return self.mask != 0

    def model_count(self) -> int:
        """Número de asignaciones que satisfacen la fórmula."""
        return popcount(self.mask)

    def implies(self, other: 'TruthTable') -> bool:
        """Implicación entre elementos del álgebra: inclusión de máscaras."""
        if other.vars != self.vars:
            raise ValueError("Las tablas deben compartir la lista de variables")
        return self.mask & ~other.mask == 0


# =====================================================================
# Impresión
# =====================================================================

def format_parenthesized(formula: Formula) -> str:
    """
    Forma totalmente parentizada; parse(format_parenthesized(f)) reproduce f.
    """
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        return f"!{format_parenthesized(formula.operand)}"
    return f"({format_parenthesized(formula.left)} {formula.symbol} {format_parenthesized(formula.right)})"


def format_compact(formula: Formula) -> str:
    """Forma compacta sin espacios y con los paréntesis mínimos según precedencia."""
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        inner = format_compact(formula.operand)
        if formula.operand.precedence < Not.precedence:
            inner = f"({inner})"
        return f"!{inner}"

    left = format_compact(formula.left)
    right = format_compact(formula.right)
    # implies asocia a la derecha; el resto se imprime asociando a la izquierda
    right_assoc = isinstance(formula, Implies)
    if formula.left.precedence < formula.precedence or (
            right_assoc and formula.left.precedence == formula.precedence):
        left = f"({left})"
    if formula.right.precedence < formula.precedence or (
            not right_assoc and formula.right.precedence == formula.precedence):
        right = f"({right})"
    return f"{left}{formula.symbol}{right}"
