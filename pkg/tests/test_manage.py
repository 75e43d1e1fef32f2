import json

import pytest
from typer.testing import CliRunner

from manage import app
from src.codes.construction import hexacode, perturb_coloring, random_code, shrikhande_independent_coloring
from src.formats.files import read_coloring, write_code, write_coloring
from src.graph.graph import GraphSpec


@pytest.fixture
def runner() -> CliRunner:
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 always keeps stderr apart
        return CliRunner()


def run_json(runner, args, exit_code=0):
    result = runner.invoke(app, args)
    assert result.exit_code == exit_code, result.stdout
    return json.loads(result.stdout)


class TestAnalyze:
    def test_passing_matrix(self, runner, input_file):
        data = run_json(runner, ["analyze", "--graph", "hamming:n=2,q=3", "--matrix", input_file("ext_q3_n2.json")])
        assert data["eigenvalues"] == [4, 1, -2]
        assert data["a_times_V"]["0"] == ["4", "4"]

    def test_failing_matrix(self, runner, input_file):
        data = run_json(
            runner,
            ["analyze", "--graph", "hamming:n=14,q=3", "--matrix", input_file("ext_q3_n14.json"), "--color", "0"],
            exit_code=1,
        )
        failed = [check for check in data["checks"] if check["verdict"] == "fail"]
        assert failed[0]["name"] == "theorem1_integrality"

    def test_doob_shell_count(self, runner, input_file):
        data = run_json(
            runner, ["analyze", "-g", "doob:m=11,n=0", "-m", input_file("ext_doob_22.json")], exit_code=1
        )
        assert data["shell_table"]["W^1_2"] == 484
        assert [c["name"] for c in data["checks"] if c["verdict"] == "fail"] == ["shell_count"]

    def test_text_output(self, runner, input_file):
        result = runner.invoke(
            app, ["analyze", "-g", "hamming:n=2,q=3", "-m", input_file("ext_q3_n2.json"), "--format", "text"]
        )
        assert result.exit_code == 0
        assert "lemma2" in result.stdout

    @pytest.mark.parametrize(
        "graph,matrix",
        [("hamming:n=2,q=3", "ext_doob_22.json"), ("hamming:n=0,q=3", "ext_q3_n2.json"), ("hamming:n=2,q=3", "missing.json")],
    )
    def test_input_errors(self, runner, input_file, graph, matrix):
        result = runner.invoke(app, ["analyze", "--graph", graph, "--matrix", input_file(matrix)])
        assert result.exit_code == 2


class TestScan:
    def test_ternary(self, runner):
        data = run_json(runner, ["scan-extended", "--family", "hamming", "--q", "3", "--lmax", "4"])
        verdicts = [row["verdict"] for row in data["rows"]]
        assert verdicts[0] == "passes all necessary conditions"
        assert verdicts[1].startswith("parity fails")
        assert all(v.startswith("theorem1_integrality (colour 0) fails") for v in verdicts[2:])

    def test_doob(self, runner):
        data = run_json(runner, ["scan-extended", "--family", "doob", "--lmin", "3", "--lmax", "3"])
        assert data["rows"][0]["first_failure"]["name"] == "shell_count"
        assert data["rows"][0]["cardinality"] == str(4**18)

    def test_quinary(self, runner):
        data = run_json(runner, ["scan-extended", "--family", "hamming", "--q", "5", "--lmax", "4"])
        assert [row["length"] for row in data["rows"]] == [2, 7, 32, 157]
        for row in data["rows"]:
            if row["length"] % 2:
                assert row["first_failure"]["name"] == "parity"

    def test_bad_range(self, runner):
        assert runner.invoke(app, ["scan-extended", "--family", "hamming", "--q", "3", "--lmin", "3", "--lmax", "2"]).exit_code == 2
        assert runner.invoke(app, ["scan-extended", "--family", "doob", "--q", "3"]).exit_code == 2


class TestVerifyCode:
    def test_repetition(self, runner, input_file, tmp_path):
        coloring = str(tmp_path / "distance.txt")
        data = run_json(
            runner,
            ["verify-code", "--code", input_file("repetition_h42.txt"), "--expect", "extended-perfect", "--write-coloring", coloring],
        )
        assert data["distance"] == 4
        assert data["covering_radius"] == 2
        assert data["projections_perfect"] == {"1": True, "2": True, "3": True, "4": True}
        assert data["quotient"] == {"k": 3, "rows": [[0, 4, 0], [1, 0, 3], [0, 4, 0]]}
        assert data["extended_matrix"]
        assert read_coloring(coloring).class_sizes() == (2, 8, 6)

    def test_singleton(self, runner, input_file):
        data = run_json(runner, ["verify-code", "--code", input_file("singleton_h23.txt"), "--expect", "extended-perfect"])
        assert data["distance"] == "inf"
        assert data["closest_pair"] is None

    def test_hexacode(self, runner, tmp_path):
        path = str(tmp_path / "hexacode.txt")
        coloring = str(tmp_path / "hexacode_distance.txt")
        write_code(path, hexacode())
        data = run_json(runner, ["verify-code", "--code", path, "--expect", "completely-regular", "--write-coloring", coloring])
        assert data["cardinality"] == 64
        assert data["extended_perfect"]
        assert data["quotient"]["rows"] == [[0, 18, 0], [1, 2, 15], [0, 6, 12]]

        data = run_json(runner, ["verify-coloring", "--coloring", coloring])
        assert data["quotient"]["rows"] == [[0, 18, 0], [1, 2, 15], [0, 6, 12]]

    def test_random_code(self, runner, tmp_path):
        path = str(tmp_path / "random.txt")
        write_code(path, random_code(GraphSpec.hamming(6, 4), 64, seed=7))
        data = run_json(runner, ["verify-code", "--code", path, "--expect", "extended-perfect"], exit_code=1)
        assert not data["extended_perfect"]
        assert data["distance"] < 4
        assert len(data["closest_pair"]) == 2

    def test_unmet_expectation(self, runner, input_file):
        result = runner.invoke(app, ["verify-code", "--code", input_file("repetition_h42.txt"), "--expect", "perfect"])
        assert result.exit_code == 1

    def test_budget(self, runner, input_file):
        result = runner.invoke(app, ["verify-code", "--code", input_file("repetition_h42.txt"), "--budget", "8"])
        assert result.exit_code == 3

    def test_budget_from_environment(self, runner, input_file):
        result = runner.invoke(
            app, ["verify-code", "--code", input_file("repetition_h42.txt")], env={"ENUMERATION_BUDGET": "8"}
        )
        assert result.exit_code == 3


class TestVerifyColoring:
    def test_perfect(self, runner, input_file):
        data = run_json(runner, ["verify-coloring", "--coloring", input_file("shrikhande_even.txt")])
        assert data["perfect"]
        assert data["quotient"]["rows"] == [[0, 6], [2, 4]]
        assert data["class_sizes"] == [4, 12]

    def test_counterexample(self, runner, tmp_path):
        path = str(tmp_path / "perturbed.txt")
        write_coloring(path, perturb_coloring(shrikhande_independent_coloring(GraphSpec.doob(1, 0))))
        data = run_json(runner, ["verify-coloring", "--coloring", path], exit_code=1)
        assert not data["perfect"]
        first, second = data["counterexample"]["profiles"]
        assert first != second


class TestOracle:
    def test_agreement(self, runner, input_file):
        data = run_json(
            runner, ["oracle", "--graph", "doob:m=1,n=0", "--coloring", input_file("shrikhande_even.txt"), "--color", "0"]
        )
        assert data["agrees"]
        assert {row["lambda"]: row["mass_times_V"] for row in data["rows"]} == {6: 16, 2: 0, -2: 48}

    def test_graph_mismatch(self, runner, input_file):
        result = runner.invoke(
            app, ["oracle", "--graph", "hamming:n=2,q=4", "--coloring", input_file("shrikhande_even.txt"), "--color", "0"]
        )
        assert result.exit_code == 2

    def test_too_large(self, runner, tmp_path):
        g = GraphSpec.hamming(13, 2)
        path = tmp_path / "big.txt"
        lines = ["hamming:n=13,q=2"] + [f"{i:013b} : {min(i, 1)}" for i in range(g.vertex_count)]
        path.write_text("\n".join(lines) + "\n")
        result = runner.invoke(app, ["oracle", "--graph", "hamming:n=13,q=2", "--coloring", str(path), "--color", "0"])
        assert result.exit_code == 3
