"""
Esquemas JSON publicados para los archivos de espacio y la salida --json.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List

import jsonschema

SCHEMA_DIR = Path(__file__).resolve().parent


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict[str, Any]:
    """Carga el esquema `<name>.schema.json`."""
    with open(SCHEMA_DIR / f"{name}.schema.json", "r", encoding="utf-8") as f:
        return json.load(f)


def available_schemas() -> List[str]:
    return sorted(p.name[:-len(".schema.json")] for p in SCHEMA_DIR.glob("*.schema.json"))


def schema_errors(document: Any, name: str) -> List[str]:
    """
    Valida un documento contra un esquema publicado.

    Returns:
        List[str]: Mensajes de error con la ruta del campo; vacía si es válido
    """
    validator = jsonschema.Draft7Validator(load_schema(name))
    errors = sorted(validator.iter_errors(document), key=lambda e: list(e.absolute_path))
    messages = []
    for error in errors:
        location = "/".join(str(part) for part in error.absolute_path) or "(raíz)"
        messages.append(f"{location}: {error.message}")
    return messages
