from math import comb

import orjson
import pytest
from click.testing import CliRunner

from src.cli.commands import cli
from src.cli.formats import emit_building_set
from tests.builders import brute_alternating_count


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def hoch_file(tmp_path, hoch_2_4):
    path = tmp_path / "hoch24.txt"
    path.write_text(emit_building_set(hoch_2_4), encoding="utf-8")
    return str(path)


def _rows(text):
    return [line.split("\t") for line in text.splitlines()]


def _error(result):
    return orjson.loads(result.stderr)


# ============================================================================
# BETTI
# ============================================================================

def test_betti_of_a_path(runner):
    result = runner.invoke(cli, ["betti", "--path", "6"])
    assert result.exit_code == 0, result.output
    assert result.stdout == "k\tbeta\n0\t1\n1\t5\n2\t9\n3\t5\n"


@pytest.mark.parametrize("n", range(2, 8))
def test_betti_of_complete_graphs(runner, n):
    result = runner.invoke(cli, ["betti", "--complete", str(n)])
    assert result.exit_code == 0, result.output
    expected = [comb(n, 2 * k) * brute_alternating_count(2 * k) for k in range(0, n // 2 + 1)]
    assert [int(row[1]) for row in _rows(result.stdout)[1:]] == expected


def test_betti_both_methods(runner):
    result = runner.invoke(cli, ["betti", "--hochschild", "2", "4", "--method", "both"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert rows[0] == ["k", "alternating", "homology"]
    assert rows[1:] == [["0", "1", "1"], ["1", "4", "4"], ["2", "5", "5"], ["3", "2", "2"]]


def test_betti_from_a_file(runner, hoch_file):
    result = runner.invoke(cli, ["betti", "--building-set", hoch_file, "--method", "homology"])
    assert result.exit_code == 0, result.output
    assert [row[1] for row in _rows(result.stdout)[1:]] == ["1", "4", "5", "2"]


def test_betti_json(runner):
    result = runner.invoke(cli, ["betti", "--path", "6", "--format", "json"])
    payload = orjson.loads(result.stdout)
    assert payload["betti"] == [1, 5, 9, 5]
    assert payload["method"] == "alternating"
    assert payload["source"] == "path(6)"
    assert "breakdown" not in payload


def test_breakdown_and_shape(runner):
    result = runner.invoke(cli, ["betti", "--path", "4", "--breakdown", "--unimodality"])
    assert result.exit_code == 0, result.output
    assert "\nsubset\tk\tcount\n" in result.stdout
    assert "-\t0\t1\n" in result.stdout
    assert "1,2,3,4\t2\t2\n" in result.stdout
    assert "unimodal\ttrue\n" in result.stdout


def test_graph_method_on_a_graph_file(runner, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("1 2\n2 3\n3 4\n4 5\n5 1\n", encoding="utf-8")
    graph = runner.invoke(cli, ["betti", "--graph", str(path), "--method", "graph"])
    oracle = runner.invoke(cli, ["betti", "--graph", str(path), "--method", "homology"])
    assert graph.exit_code == 0 and oracle.exit_code == 0
    assert graph.stdout == oracle.stdout


# ============================================================================
# OTHER COMMANDS
# ============================================================================

def test_verify_el_prints_the_top_chain(runner, hoch_file):
    result = runner.invoke(cli, ["verify-el", "--building-set", hoch_file])
    assert result.exit_code == 0, result.output
    assert result.stdout == "{} {5,6} {3,4,5,6} {1,2,3,4,5,6}\n"


def test_hochschild_table(runner):
    result = runner.invoke(cli, ["hochschild-table", "--max-m", "1"])
    assert result.exit_code == 0, result.output
    assert _rows(result.stdout) == [
        ["m", "n", "betti"],
        ["0", ">=2", "1", "1"],
        ["1", "2", "1", "2"],
        ["1", ">=3", "1", "2", "1"],
    ]


def test_complex_betti(runner):
    result = runner.invoke(cli, ["complex-betti", "--path", "4"])
    assert result.exit_code == 0, result.output
    assert [row[1] for row in _rows(result.stdout)[1:]] == ["1", "0", "6", "0", "6", "0", "1"]


def test_anumber(runner, tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("1 2\n2 3\n3 4\n", encoding="utf-8")
    result = runner.invoke(cli, ["anumber", "--graph", str(path), "--format", "json"])
    assert result.exit_code == 0, result.output
    assert orjson.loads(result.stdout)["a"] == 2


def test_compare(runner):
    result = runner.invoke(cli, ["compare", "--path", "4"])
    assert result.exit_code == 0, result.output
    rows = _rows(result.stdout)
    assert rows[:4] == [["k", "alternating", "homology"], ["0", "1", "1"], ["1", "3", "3"], ["2", "2", "2"]]


def test_compare_reports_the_cycle_mismatches(runner, tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text("4 1\n1 3\n3 2\n2 5\n5 4\n", encoding="utf-8")
    result = runner.invoke(cli, ["compare", "--graph", str(path)])
    assert result.exit_code == 0, result.output
    assert "2\t12\t10\n" in result.stdout
    assert "1,2,3,4\t3\t2:2\n1,2,3,5\t3\t2:2\n" in result.stdout


# ============================================================================
# ERRORS
# ============================================================================

def test_missing_source_is_an_input_error(runner):
    result = runner.invoke(cli, ["betti"])
    assert result.exit_code == 2
    record = _error(result)
    assert record["error"] == "InputError"
    assert record["success"] is False


def test_two_sources_are_an_input_error(runner):
    result = runner.invoke(cli, ["betti", "--path", "4", "--star", "4"])
    assert result.exit_code == 2


def test_non_chordal_input_is_a_precondition_error(runner):
    result = runner.invoke(cli, ["betti", "--cycle", "5"])
    assert result.exit_code == 3
    assert _error(result)["error"] == "NotChordal"


def test_large_input_is_a_resource_error(runner):
    result = runner.invoke(cli, ["betti", "--hochschild", "17", "1"])
    assert result.exit_code == 4
    assert _error(result)["error"] == "GroundTooLarge"


def test_parse_error_carries_the_line(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("1\n2\n1 x\n", encoding="utf-8")
    result = runner.invoke(cli, ["betti", "--building-set", str(path)])
    assert result.exit_code == 2
    record = _error(result)
    assert record["error"] == "ParseError"
    assert record["line"] == 3


def test_graph_method_needs_a_graph(runner):
    result = runner.invoke(cli, ["betti", "--hochschild", "2", "2", "--method", "graph"])
    assert result.exit_code == 2


def test_bad_config_file(runner, tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("unknown_setting: 1\n", encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(path), "betti", "--path", "4"])
    assert result.exit_code == 2
    assert _error(result)["error"] == "ConfigError"


def test_config_file_limits_apply(runner, tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("max_enumeration_ground: 4\n", encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(path), "betti", "--path", "6"])
    assert result.exit_code == 4


def test_verify_el_honours_a_zero_bound(runner, hoch_file):
    result = runner.invoke(cli, ["verify-el", "--building-set", hoch_file, "--max-ground", "0"])
    assert result.exit_code == 4
    assert _error(result)["error"] == "GroundTooLarge"


def test_method_alias(runner):
    alias = runner.invoke(cli, ["betti", "--path", "4", "--method", "alt"])
    full = runner.invoke(cli, ["betti", "--path", "4", "--method", "alternating"])
    assert alias.exit_code == full.exit_code == 0
    assert alias.stdout == full.stdout
