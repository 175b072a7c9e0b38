"""
Fixtures compartidas de la batería de pruebas.
"""

import json
from pathlib import Path

import pytest
from hypothesis import strategies as st

from src.core.models import Space
from src.core.services.builders import SpaceBuilder
from src.infrastructure.config.settings import settings
from src.infrastructure.export import dumps, space_document

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def builder() -> SpaceBuilder:
    return SpaceBuilder()


@pytest.fixture(scope="session")
def l1(builder) -> Space:
    return builder.build_literal(1)


@pytest.fixture(scope="session")
def l2(builder) -> Space:
    return builder.build_literal(2)


@pytest.fixture(scope="session")
def l3(builder) -> Space:
    return builder.build_literal(3)


@pytest.fixture(scope="session")
def b1(builder) -> Space:
    return builder.build_full_boolean(1)


@pytest.fixture(scope="session")
def b2(builder) -> Space:
    return builder.build_full_boolean(2)


@pytest.fixture
def isolated_settings(monkeypatch):
    """Copia privada de la configuración global; se restaura al terminar la prueba."""
    monkeypatch.setattr(settings, "_config_data", settings.get_all_config())
    return settings


@pytest.fixture
def write_space(tmp_path):
    """Guarda un espacio (o un documento crudo) en tmp_path y devuelve la ruta."""
    def _write(space_or_document, name: str = "space.json") -> str:
        path = tmp_path / name
        if isinstance(space_or_document, Space):
            text = dumps(space_document(space_or_document))
        else:
            text = json.dumps(space_or_document)
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


def b2_point(space: Space, mask: int):
    """Punto de B2 con tabla de verdad `mask` (el id es mask - 1)."""
    return space.points[mask - 1]


@st.composite
def random_spaces(draw, min_points: int = 2, max_points: int = 6):
    """Espacios aleatorios válidos generados con semilla."""
    num_points = draw(st.integers(min_value=min_points, max_value=max_points))
    num_maximal = draw(st.integers(min_value=2, max_value=5))
    seed = draw(st.integers(min_value=0, max_value=10_000))
    return SpaceBuilder().random_space(num_points, num_maximal, seed)
