"""
Repositorio de espacios en archivos JSON.

Formato:

    {"points": ["a", "not_a"],
     "maximal_consistent": [["a"], ["not_a"]],
     "origin": {"kind": "literal", "n_vars": 1}}

Los conjuntos se escriben por etiqueta; "origin" es opcional.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict

from ...application.ports.interfaces import SpaceRepository
from ...core.models import Point, Space, Subset
from ...core.rules import default_validator
from ...shared.exceptions import SpaceFileError, SpaceValidationError, UnknownLabelError
from ...shared.utils import antichain_maximal, ids_to_bits
from ..config.constants import SPACE_FILE_KEYS
from ..export.report_writer import atomic_write_text
from ..export.schemas import schema_errors
from ..export.serializers import dumps, space_document

logger = logging.getLogger(__name__)


class JsonSpaceRepository(SpaceRepository):
    """Implementación de SpaceRepository sobre archivos JSON."""

    def save(self, space: Space, path: str) -> None:
        atomic_write_text(path, dumps(space_document(space)))
        logger.info("Espacio guardado en %s (%d puntos)", path, space.size)

    def load(self, path: str, validate: bool = True) -> Space:
        try:
            with open(path, "r", encoding="utf-8") as f:
                document = json.load(f)
        except OSError as e:
            raise SpaceFileError(f"No se pudo leer el archivo de espacio {path}: {e}") from e
        except ValueError as e:
            raise SpaceFileError(f"JSON inválido en {path}: {e}") from e
        return self.from_document(document, validate=validate, source=path)

    def exists(self, path: str) -> bool:
        return Path(path).is_file()

    def from_document(self, document: Any, validate: bool = True, source: str = "<documento>") -> Space:
        """
        Convierte un documento ya decodificado en un espacio.

        Raises:
            SpaceFileError: El documento no cumple el esquema de espacio
            UnknownLabelError: Un conjunto maximal referencia una etiqueta inexistente
            SpaceValidationError: El espacio viola los axiomas y validate es True
        """
        errors = schema_errors(document, "space")
        if errors:
            raise SpaceFileError(f"Archivo de espacio mal formado ({source}): " + "; ".join(errors))

        labels = document[SPACE_FILE_KEYS["points"]]
        points = [Point(i, label) for i, label in enumerate(labels)]
        index: Dict[str, int] = {}
        for point in points:
            index.setdefault(point.label, point.id)

        masks = []
        for maximal_labels in document[SPACE_FILE_KEYS["maximal"]]:
            for label in maximal_labels:
                if label not in index:
                    raise UnknownLabelError(label)
            masks.append(ids_to_bits(index[label] for label in maximal_labels))

        width = len(points)
        maximal = [Subset(m, width) for m in antichain_maximal(masks)]
        space = Space(points, maximal, document.get(SPACE_FILE_KEYS["origin"]))

        report = default_validator.validate(space)
        if not report.ok:
            if validate:
                raise SpaceValidationError(f"Espacio inválido ({source}): {report.summary()}", report)
            logger.warning("Se carga %s sin validar: %s", source, report.summary())
        logger.debug("Espacio cargado desde %s: %r", source, space)
        return space
