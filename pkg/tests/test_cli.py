# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import json

import pytest

from shared.automata import minimize
from shared.automata.codec import dumps, loads
from services.harness.main import EXIT_OK, EXIT_USAGE, main
from services.witnesses import EXAMPLE_REGEX, example_language


def test_analyze_regex(capsys):
    assert main(["analyze", EXAMPLE_REGEX]) == EXIT_OK
    out = capsys.readouterr().out
    assert '"mpc":1' in out
    assert '"sc":5' in out
    assert "witnesses" not in json.loads(out)


def test_analyze_text_with_witnesses(capsys):
    assert main(["analyze", "(aa)^*", "--format", "text", "--witnesses"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("mpc=1 mpl=2 mps=2 sc=2")
    assert "mpl witness: 'aa'" in out


def test_analyze_file_with_alphabet_option(tmp_path, capsys):
    source = tmp_path / "lang.dfa"
    assert main(["apply", "complement", "a^*", "--alphabet", "ab", "-o", str(source)]) == EXIT_OK
    assert main(["analyze", str(source)]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["sc"] == 2


def test_complement_twice_round_trips(tmp_path):
    once, twice = tmp_path / "once.dfa", tmp_path / "twice.dfa"
    assert main(["apply", "complement", EXAMPLE_REGEX, "-o", str(once)]) == EXIT_OK
    assert main(["apply", "complement", str(once), "-o", str(twice)]) == EXIT_OK
    assert twice.read_text(encoding="utf-8") == dumps(minimize(example_language()), "text")


def test_apply_arity_errors(capsys):
    assert main(["apply", "union", "a^*"]) == EXIT_USAGE
    assert main(["apply", "star", "a^*", "b^*"]) == EXIT_USAGE
    assert main(["apply", "loopify", "ab"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_construct_binary(capsys):
    assert main(["construct", "binary", "--p1", "1", "--p2", "2", "--p3", "3"]) == EXIT_OK
    d = loads(capsys.readouterr().out)
    assert d.n_states == 3


def test_construct_intersection_json(capsys):
    assert main(["construct", "intersection", "--m", "2", "--n", "2", "--k", "2", "--format", "json"]) == EXIT_OK
    documents = json.loads(capsys.readouterr().out)
    assert isinstance(documents, list) and len(documents) == 2


@pytest.mark.parametrize("argv", [
    ["construct", "binary", "--p1", "3", "--p2", "1", "--p3", "2"],
    ["construct", "binary", "--p1", "1"],
    ["construct", "star", "--n", "-1", "--k", "1"],
    ["analyze", "(a"],
])
def test_bad_input_exits_with_usage_code(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        main(["prove"])


def test_verify_small_sweep(tmp_path, capsys):
    report = tmp_path / "report.md"
    code = main(["verify", "binary", "--max-param", "2", "--report", str(report)])
    assert code == EXIT_OK
    assert "| binary | 4 | 4 | 0 | pass |" in capsys.readouterr().out
    assert report.read_text(encoding="utf-8").startswith("# Pumping constants verification")


def test_oracle(capsys):
    assert main(["oracle", "a+aaa", "--alphabet", "a", "--bound", "6"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["status"] == "PASS"


def test_exhaustive_search(capsys):
    argv = ["search", "--states", "1", "--alphabet", "1", "--op", "complement", "--constant", "mpc", "--exhaustive"]
    assert main(argv) == EXIT_OK
    assert "complement / mpc (2 instances)" in capsys.readouterr().out
