"""
Pruebas de extremo a extremo de la CLI `cspace`.
"""

import json

import pytest

from conftest import golden
from src.infrastructure.config.settings import Settings, settings
from src.infrastructure.export.schemas import schema_errors
from src.presentation.cli import main


@pytest.fixture
def run(capsys):
    """Ejecuta la CLI y devuelve (código, stdout, stderr)."""
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


@pytest.fixture
def l2_file(write_space, l2):
    return write_space(l2, "l2.json")


@pytest.fixture
def b2_file(write_space, b2):
    return write_space(b2, "b2.json")


class TestBuild:

    def test_literal_to_stdout_matches_golden(self, run):
        code, out, _ = run("build", "literal", "--vars", "2")
        assert code == 0
        assert out == golden("l2_space.json")

    def test_build_to_file(self, run, tmp_path):
        path = tmp_path / "b1.json"
        code, out, _ = run("build", "boolean", "--vars", "1", "-o", str(path))
        assert code == 0
        assert out == ""
        document = json.loads(path.read_text(encoding="utf-8"))
        assert schema_errors(document, "space") == []
        assert document["points"] == ["!a", "a", "1"]

    def test_random_seed(self, run):
        first = run("build", "random", "--points", "5", "--maximal", "3", "--seed", "4")
        second = run("build", "random", "--points", "5", "--maximal", "3", "--seed", "4")
        assert first[0] == 0
        assert first[1] == second[1]
        assert json.loads(first[1])["origin"]["seed"] == 4

    def test_formulas(self, run, tmp_path):
        path = tmp_path / "formulas.txt"
        path.write_text("a\n!a\n", encoding="utf-8")
        code, out, _ = run("build", "formulas", str(path))
        assert code == 0
        assert json.loads(out)["maximal_consistent"] == [["a"], ["!a"]]

    def test_unsatisfiable_formula_is_a_domain_error(self, run, tmp_path):
        path = tmp_path / "formulas.txt"
        path.write_text("a\nb & !b\n!a\n", encoding="utf-8")
        code, out, err = run("build", "formulas", str(path))
        assert code == 1
        assert out == ""
        assert "cspace: error:" in err

    def test_out_of_range_is_a_usage_error(self, run):
        assert run("build", "boolean", "--vars", "4")[0] == 2


class TestAnalysisCommands:

    def test_validate_golden(self, run, l2_file):
        code, out, _ = run("validate", l2_file, "--json")
        assert code == 0
        assert out == golden("l2_validate.json")

    def test_validate_invalid_space(self, run, write_space):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p", "q"]]})
        code, out, _ = run("validate", path, "--json")
        assert code == 1
        record = json.loads(out)
        assert schema_errors(record, "validation") == []
        assert record["ok"] is False
        assert record["violations"][0]["axiom"] == "axiom-1"

    def test_negate_golden(self, run, l2_file):
        code, out, _ = run("negate", l2_file, "--set", "not_v1,not_v2", "--z-mode", "subsets", "--json")
        assert code == 0
        assert out == golden("l2_negate.json")

    def test_negate_text(self, run, l2_file):
        code, out, _ = run("negate", l2_file, "--set", "not_v1,not_v2", "--z-mode", "subsets")
        assert code == 0
        assert out == golden("l2_negate.txt")

    @pytest.mark.parametrize("argv, schema", [
        (["classes", "{l2}", "--max-size", "2"], "classes"),
        (["implies", "{b2}", "--lhs", "a", "--rhs", "a|b"], "implies"),
        (["meet", "{l2}", "--lhs", "v1", "--rhs", "v2"], "meet"),
        (["join", "{b2}", "--x", "a", "--y", "b"], "join"),
        (["lub", "{b2}", "--x", "a", "--y", "b", "--z-mode", "elements"], "lub"),
        (["minimal-inconsistent", "{l2}"], "minimal_inconsistent"),
        (["detect-boolean", "{b2}"], "detect_boolean"),
        (["audit", "{l2}", "--props", "P01,P07"], "audit"),
    ])
    def test_json_output_matches_schema(self, run, l2_file, b2_file, argv, schema):
        argv = [arg.format(l2=l2_file, b2=b2_file) for arg in argv] + ["--json"]
        code, out, _ = run(*argv)
        assert code == 0
        assert schema_errors(json.loads(out), schema) == []

    def test_output_file(self, run, b2_file, tmp_path):
        path = tmp_path / "out" / "join.txt"
        code, out, _ = run("join", b2_file, "--x", "a", "--y", "b", "-o", str(path))
        assert code == 0
        assert out == ""
        assert path.read_text(encoding="utf-8").startswith("a ∨ b = a|b")

    def test_unknown_label_is_a_usage_error(self, run, l2_file):
        code, _, err = run("negate", l2_file, "--set", "v7")
        assert code == 2
        assert "v7" in err

    def test_missing_file(self, run, tmp_path):
        assert run("validate", str(tmp_path / "absent.json"))[0] == 1

    def test_force_loads_invalid_space(self, run, write_space):
        path = write_space({"points": ["p", "q"], "maximal_consistent": [["p", "q"]]})
        assert run("classes", path)[0] == 1
        assert run("classes", path, "--force")[0] == 0


class TestLimits:

    def test_max_points_flag(self, run, write_space, l3):
        path = write_space(l3, "l3.json")
        previous = settings.max_points
        code, _, err = run("classes", path, "--max-points", "4")
        assert code == 1
        assert "límite exhaustivo es 4" in err
        assert settings.max_points == previous

    def test_incoherent_environment_is_a_domain_error(self, run, l2_file, monkeypatch):
        broken = Settings(environ={"CSPACE_MAX_POINTS": "30"}, deferred=True)
        monkeypatch.setattr(settings, "load_error", broken.load_error)
        code, out, err = run("validate", l2_file)
        assert code == 1
        assert out == ""
        assert "no puede superar 24 puntos" in err

    def test_partial_search(self, run, write_space, l3):
        path = write_space(l3, "l3.json")
        code, out, _ = run("minimal-inconsistent", path, "--max-points", "4", "--partial", "--json")
        assert code == 0
        record = json.loads(out)
        assert record["complete"] is False
        assert len(record["sets"]) == 3


class TestAudit:

    def test_refutation_exits_zero(self, run, l2_file):
        code, out, _ = run("audit", l2_file, "--props", "P07", "--json")
        assert code == 0
        result = json.loads(out)["results"][0]
        assert result["status"] == "refuted"
        assert result["counterexample"]["witnesses"]["negation_of_y"] == ["not_v2"]

    def test_campaign(self, run, isolated_settings):
        isolated_settings.update_setting("campaign.literal_vars", [1, 2])
        isolated_settings.update_setting("campaign.boolean_vars", [1])
        isolated_settings.update_setting("campaign.random_seeds", 2)
        isolated_settings.update_setting("campaign.random_points", [4])
        code, out, _ = run("audit", "--campaign", "--props", "P01,P07", "--workers", "2", "--json")
        assert code == 0
        record = json.loads(out)
        assert schema_errors(record, "campaign") == []
        for entry in record["entries"]:
            assert schema_errors(entry["report"], "audit") == []
        assert [e["name"] for e in record["entries"]] == ["L1", "L2", "B1", "R0-4p", "R1-4p"]
        assert record["summary"][1]["first_counterexample"]["space"] == "L2"

    def test_unknown_proposition(self, run, l2_file):
        assert run("audit", l2_file, "--props", "P42")[0] == 2

    def test_file_and_campaign_together(self, run, l2_file):
        assert run("audit", l2_file, "--campaign")[0] == 2


class TestUsage:

    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["build"],
        ["negate", "space.json"],
        ["join", "space.json", "--x", "a"],
        ["classes", "space.json", "--z-mode", "points"],
        ["audit", "--workers", "0"],
    ])
    def test_usage_errors(self, run, argv):
        code, _, err = run(*argv)
        assert code == 2
        assert "cspace" in err

    def test_help(self, run):
        code, out, _ = run("--help")
        assert code == 0
        assert "negate" in out
