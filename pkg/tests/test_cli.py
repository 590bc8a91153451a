import json
import subprocess
import sys

import jsonschema
import pytest

from negder.cli import main, parse_degree_range
from negder.report import load_schema, parse_system_file, strip_timing

SPHERE = "# the sphere\nvars: x y z\nweights: 1 1 1\neq: x^2 + y^2 + z^2\n"
CUSP = "vars: x y\nweights: 3 2\neq: x^2 + y^3\n"
AMBIGUOUS = "vars: x y z\neq: x*y + z^2\n"


@pytest.fixture(scope="module")
def validator():
    schema = load_schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


@pytest.fixture
def write(tmp_path):
    def _write(text, name="input.sys"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestAnalyze:
    def test_sphere(self, capsys, write, validator):
        code, report, _ = run_json(capsys, "analyze", write(SPHERE))
        assert code == 0
        validator.validate(report)
        assert report["verdict"]["exists"] is False
        assert report["min_trivial_degree"]["degree"] == 0

    def test_text_output(self, capsys, write):
        code, out, _ = run(capsys, "analyze", write(SPHERE))
        assert code == 0 and "negative" in out

    def test_cusp_is_not_normal(self, capsys, write, validator):
        code, report, _ = run_json(capsys, "analyze", write(CUSP))
        assert code == 0
        validator.validate(report)
        assert report["normal"] is False

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "analyze", "/nonexistent/file.sys")
        assert code == 1 and "input error" in err

    def test_bad_weight_points_at_the_line(self, capsys, write):
        code, _, err = run(capsys, "analyze", write("vars: x y\nweights: 1 -2\neq: x^2 + y^2\n", "bad.sys"))
        assert code == 1 and "bad.sys:2:" in err

    def test_syntax_error_points_at_the_column(self, capsys, write):
        code, _, err = run(capsys, "analyze", write("vars: x y\nweights: 1 1\neq: x^2 + + y^2\n", "bad.sys"))
        assert code == 1 and "bad.sys:3:" in err

    def test_inhomogeneous(self, capsys, write):
        code, _, err = run(capsys, "analyze", write("vars: x y\nweights: 1 1\neq: x + y^2\n"))
        assert code == 1 and "x^2" not in err and "y^2" in err

    def test_ambiguous_grading_needs_weights(self, capsys, write):
        code, _, err = run(capsys, "analyze", write(AMBIGUOUS))
        assert code == 1 and "weights" in err

    def test_budget_exhaustion(self, capsys, write, monkeypatch):
        import negder.singularity as sing

        sing.ideal_basis.cache_clear()
        sing.is_isolated.cache_clear()
        monkeypatch.setenv("NEGDER_GB_BUDGET", "3")
        code, _, err = run(capsys, "counterexample", "--n", "6")
        assert code == 2 and "NEGDER_GB_BUDGET" in err

    def test_malformed_budget(self, capsys, write, monkeypatch):
        monkeypatch.setenv("NEGDER_GB_BUDGET", "lots")
        code, _, err = run(capsys, "analyze", write(SPHERE))
        assert code == 1 and "NEGDER_GB_BUDGET" in err

    def test_deterministic_apart_from_timing(self, capsys, write):
        path = write(SPHERE)
        _, first, _ = run_json(capsys, "analyze", path)
        _, second, _ = run_json(capsys, "analyze", path)
        assert strip_timing(first) == strip_timing(second)


class TestCounterexample:
    def test_json(self, capsys, validator):
        code, report, _ = run_json(capsys, "counterexample", "--n", "6")
        assert code == 0
        validator.validate(report)
        assert report["counterexample"]["passed"]
        assert report["verdict"]["exists"] and report["verdict"]["min_degree"] == -1
        assert report["d"] == 4

    def test_round_trip_through_analyze(self, capsys, tmp_path):
        out = tmp_path / "ex7.sys"
        code, generated, _ = run_json(capsys, "counterexample", "--n", "7", "--c", "-2", "--out", str(out))
        assert code == 0
        code, analyzed, _ = run_json(capsys, "analyze", str(out))
        assert code == 0
        assert analyzed["verdict"] == generated["verdict"]
        generated.pop("counterexample")
        assert strip_timing(analyzed)["validation"] == strip_timing(generated)["validation"]

    def test_echoed_input_parses_to_the_same_system(self, capsys):
        _, report, _ = run_json(capsys, "counterexample", "--n", "7")
        again = parse_system_file(report["system_file"])
        assert again.text() == parse_system_file(again.text()).text()
        assert again.system().p == (10, 10)

    def test_text_mode_prints_the_system_file(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--n", "6")
        assert code == 0 and "eq: x1*x4" in out and "certificate:" in out

    @pytest.mark.parametrize(
        "argv",
        [["--n", "5"], ["--n", "7", "--c", "1"], ["--n", "8", "--c", "2,2"], ["--n", "7", "--c", "a"]],
    )
    def test_bad_parameters(self, capsys, argv):
        code, _, err = run(capsys, "counterexample", *argv)
        assert code == 1 and "input error" in err


class TestOracle:
    def test_counterexample(self, capsys, tmp_path):
        path = tmp_path / "ex.sys"
        run(capsys, "counterexample", "--n", "6", "--out", str(path))
        code, payload, _ = run_json(capsys, "oracle", str(path), "--degrees", "-3..-1")
        assert code == 0
        assert payload["degrees"] == {"-3": 0, "-2": 0, "-1": 1}
        assert payload["agreement"] is True

    def test_sphere(self, capsys, write):
        code, payload, _ = run_json(capsys, "oracle", write(SPHERE), "--degrees", "-2..-1")
        assert code == 0 and payload["degrees"] == {"-2": 0, "-1": 0}
        assert payload["rule"] == {"exists": False, "min_degree": 0}

    def test_empty_range(self, capsys, write):
        code, out, _ = run(capsys, "oracle", write(SPHERE), "--degrees", "0..-1")
        assert code == 0 and "empty" in out

    @pytest.mark.parametrize("text", ["3", "a..b", "-1-2"])
    def test_bad_range(self, text):
        from negder.cli import InputError

        with pytest.raises(InputError):
            parse_degree_range(text)


class TestInferWeights:
    def test_counterexample(self, capsys, tmp_path):
        path = tmp_path / "ex.sys"
        run(capsys, "counterexample", "--n", "6", "--out", str(path))
        code, payload, _ = run_json(capsys, "infer-weights", str(path))
        assert code == 0 and payload["unique"]
        assert payload["weights"] == [[8, 8, 5, 2, 2, 2]]

    def test_ambiguous(self, capsys, write):
        code, out, _ = run(capsys, "infer-weights", write(AMBIGUOUS))
        assert code == 0 and "not unique" in out

    def test_no_grading(self, capsys, write):
        code, payload, _ = run_json(capsys, "infer-weights", write("vars: x\neq: x^2 + x\n"))
        assert code == 0 and payload["weights"] == []


def test_console_entry_point_runs_as_module():
    proc = subprocess.run(
        [sys.executable, "-m", "negder.cli", "counterexample", "--n", "6", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counterexample"]["passed"]
