"""
Registro de proposiciones auditables.

Cada entrada identifica una afirmación sobre espacios de consistencia con su
cita de anclaje, sus variables y si su veredicto está en disputa. La lógica
de comprobación vive en el servicio de auditoría; aquí solo hay metadatos.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from ...shared.exceptions import InvalidArgumentError


class PropositionId(Enum):
    P01 = "P01"
    P02 = "P02"
    P03 = "P03"
    P04 = "P04"
    P05 = "P05"
    P06 = "P06"
    P07 = "P07"
    P08 = "P08"
    P09 = "P09"
    P10 = "P10"
    P11 = "P11"
    P12 = "P12"
    P13 = "P13"
    P14 = "P14"
    P15 = "P15"
    P16 = "P16"

    @classmethod
    def parse(cls, value: str) -> "PropositionId":
        try:
            return cls(value.strip().upper())
        except ValueError:
            raise InvalidArgumentError(f"Proposición desconocida: {value!r}") from None


class VariableKind(Enum):
    """Dominio de una variable cuantificada."""
    POINT = "point"
    SET = "set"


@dataclass(frozen=True)
class PropositionSpec:
    """
    Metadatos de una proposición.

    Attributes:
        id: Identificador estable
        title: Nombre corto
        statement: Enunciado en notación de conjuntos
        anchor: Cita textual que localiza la afirmación
        variables: Variables cuantificadas universalmente, en orden
        disputed: Si el veredicto se fija por regresión y no como teorema
        note: Observaciones
    """
    id: PropositionId
    title: str
    statement: str
    anchor: str
    variables: Tuple[Tuple[str, VariableKind], ...] = ()
    disputed: bool = False
    note: str = ""

    @property
    def quantifies_sets(self) -> bool:
        return any(kind is VariableKind.SET for _, kind in self.variables)


_P = VariableKind.POINT
_S = VariableKind.SET

PROPOSITION_REGISTRY: Dict[PropositionId, PropositionSpec] = {
    spec.id: spec for spec in [
        PropositionSpec(
            PropositionId.P01, "vacío consistente", "∅ ∈ ℘",
            "It follows immediately from conditions 2 and 3",
        ),
        PropositionSpec(
            PropositionId.P02, "congruencia", "χ ~ γ ⇒ χ ∪ κ ~ γ ∪ κ",
            "For any κ ⊆ X, if χ ~ γ",
            (("chi", _S), ("gamma", _S), ("kappa", _S)),
        ),
        PropositionSpec(
            PropositionId.P03, "booleano desde un álgebra",
            "un espacio que proviene de un álgebra de Boole es booleano",
            "arises from a Boolean algebra",
            disputed=True,
            note="Solo aplica a espacios de origen algebraico (literal, boolean, formulas)",
        ),
        PropositionSpec(
            PropositionId.P04, "unicidad de la negación", "y₁, y₂ negaciones de x ⇒ y₁ ~ y₂",
            "unique in the sense that", (("x", _P),),
        ),
        PropositionSpec(
            PropositionId.P05, "involución", "¬¬x ~ x",
            "Finally, the transitivity of ~", (("x", _P),),
        ),
        PropositionSpec(
            PropositionId.P06, "triple inconsistente", "{x} ∪ {y, ȳ} ∉ ℘",
            "But this is absurd", (("x", _P), ("y", _P)),
        ),
        PropositionSpec(
            PropositionId.P07, "absorción", "{x, y, ȳ} ~ {x}",
            "by definition of negation we have", (("x", _P), ("y", _P)),
            disputed=True,
            note="Las instancias con x = y o x negación de y se omiten como degeneradas",
        ),
        PropositionSpec(
            PropositionId.P08, "congruencia de la negación", "x ~ y ⇔ x̄ ~ ȳ",
            "x ~ y if and only if x̄ ~ ȳ", (("x", _P), ("y", _P)),
            note="El enunciado aparece dos veces con idéntica redacción; se registra una sola vez",
        ),
        PropositionSpec(
            PropositionId.P09, "reflexividad", "x → x",
            "but this just says that", (("x", _P),),
        ),
        PropositionSpec(
            PropositionId.P10, "antisimetría", "x → y ∧ y → x ⇒ x ~ y",
            "By transitivity of ~ we get immediately", (("x", _P), ("y", _P)),
        ),
        PropositionSpec(
            PropositionId.P11, "equivalencia implica flechas", "x ~ y ⇒ x → y ∧ y → x",
            "it follows that {x, ȳ} ~ {y, ȳ}", (("x", _P), ("y", _P)),
        ),
        PropositionSpec(
            PropositionId.P12, "transitividad", "x → y ∧ y → z ⇒ x → z",
            "But this just means x → z", (("x", _P), ("y", _P), ("z", _P)),
        ),
        PropositionSpec(
            PropositionId.P13, "introducción del meet", "t → x ∧ t → y ⇒ t → {x, y}",
            "If t → x and t → y", (("t", _P), ("x", _P), ("y", _P)),
        ),
        PropositionSpec(
            PropositionId.P14, "cota superior mínima",
            "x → x ∨ y ∧ y → x ∨ y; x → t ∧ y → t ⇒ x ∨ y → t",
            "is a least upper bound of x and y", (("x", _P), ("y", _P), ("t", _P)),
            disputed=True,
            note="También verifica la mitad de cota superior",
        ),
        PropositionSpec(
            PropositionId.P15, "contrapositiva", "x → y ⇔ ȳ → x̄",
            "x → y if and only if ȳ → x̄", (("x", _P), ("y", _P)),
        ),
        PropositionSpec(
            PropositionId.P16, "monotonía", "x → y ⇒ {t, x} → {t, y}",
            "If x → y then {t, x} → {t, y}", (("t", _P), ("x", _P), ("y", _P)),
            disputed=True,
        ),
    ]
}


def all_propositions() -> List[PropositionId]:
    """Todas las proposiciones en orden de identificador."""
    return list(PropositionId)


def parse_propositions(text: str) -> List[PropositionId]:
    """
    Interpreta una lista separada por comas ("P02,P07").

    Raises:
        InvalidArgumentError: Si algún identificador no existe
    """
    ids = {PropositionId.parse(item) for item in text.split(",") if item.strip()}
    return sorted(ids, key=lambda p: p.value)
