"""
Pruebas del repositorio JSON de espacios y de la lectura de fórmulas.
"""

import json

import pytest

from conftest import golden
from src.core.models import ViolationKind
from src.infrastructure.persistence import FormulaFileSource, JsonSpaceRepository, parse_formula_lines
from src.shared.exceptions import (
    FormulaSyntaxError,
    SpaceFileError,
    SpaceValidationError,
    UnknownLabelError,
)


@pytest.fixture
def repository():
    return JsonSpaceRepository()


class TestSpaceFiles:

    def test_save_matches_golden(self, repository, l2, tmp_path):
        path = tmp_path / "l2.json"
        repository.save(l2, str(path))
        assert path.read_text(encoding="utf-8") == golden("l2_space.json")

    def test_save_and_load(self, repository, b2, tmp_path):
        path = str(tmp_path / "nested" / "b2.json")
        repository.save(b2, path)
        assert repository.exists(path)
        assert repository.load(path) == b2
        assert not list((tmp_path / "nested").glob("*.tmp"))

    def test_origin_is_optional(self, repository, write_space):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p"], ["q"]]})
        space = repository.load(path)
        assert space.origin == {}
        assert space.labels == ["p", "q"]

    def test_dominated_maximal_sets_are_normalised(self, repository, write_space):
        path = write_space({"points": ["p", "q", "r"],
                            "maximal_consistent": [["p", "q"], ["p"], ["q", "r"]]})
        assert len(repository.load(path).maximal) == 2

    def test_invalid_json(self, repository, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(SpaceFileError):
            repository.load(str(path))

    def test_missing_file(self, repository, tmp_path):
        with pytest.raises(SpaceFileError):
            repository.load(str(tmp_path / "absent.json"))

    @pytest.mark.parametrize("document", [
        {"points": ["p"]},
        {"points": "p", "maximal_consistent": []},
        {"points": ["p", ""], "maximal_consistent": [["p"]]},
        {"points": ["p", "q"], "maximal_consistent": [["p", "p"]]},
        {"points": ["p", "q"], "maximal_consistent": [["p"], ["q"]], "extra": 1},
    ])
    def test_schema_violations(self, repository, write_space, document):
        with pytest.raises(SpaceFileError):
            repository.load(write_space(document))

    def test_unknown_label(self, repository, write_space):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p"], ["z"]]})
        with pytest.raises(UnknownLabelError):
            repository.load(path)

    def test_axiom_violation(self, repository, write_space):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p", "q"]]})
        with pytest.raises(SpaceValidationError) as exc:
            repository.load(path)
        assert ViolationKind.AXIOM_1 in exc.value.report.kinds()

    def test_forced_load_keeps_invalid_space(self, repository, write_space, caplog):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p", "q"]]})
        with caplog.at_level("WARNING", logger="src"):
            space = repository.load(path, validate=False)
        assert space.is_consistent(space.universe())
        assert "sin validar" in caplog.text


class TestFormulaFiles:

    def test_labels_comments_and_blank_lines(self):
        formulas = parse_formula_lines([
            "# literales\n",
            "a\n",
            "\n",
            "no_a: !a   # negación\n",
            "a & b\n",
        ])
        assert [label for label, _ in formulas] == ["a", "no_a", "a & b"]

    def test_syntax_error_reports_line(self):
        with pytest.raises(FormulaSyntaxError) as exc:
            parse_formula_lines(["a\n", "b &\n"])
        assert exc.value.line == 2
        assert exc.value.position == 3
        assert "línea 2" in str(exc.value)

    def test_empty_label(self):
        with pytest.raises(SpaceFileError):
            parse_formula_lines([": a\n"])

    def test_file_source(self, tmp_path, builder):
        path = tmp_path / "formulas.txt"
        path.write_text("a\n!a\nb\n!b\n", encoding="utf-8")
        space = builder.build_from_formulas(FormulaFileSource().load_formulas(str(path)))
        assert space.labels == ["a", "!a", "b", "!b"]

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpaceFileError):
            FormulaFileSource().load_formulas(str(tmp_path / "absent.txt"))
