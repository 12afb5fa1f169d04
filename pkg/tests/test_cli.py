import json

from typer.testing import CliRunner

from limweight.cli import app

runner = CliRunner()


def invoke(*args):
    result = runner.invoke(app, list(args))
    return result, json.loads(result.stdout.strip().splitlines()[-1])


def test_classify_generic_tail():
    result, payload = invoke("classify", "--alg", "sl", "--mu", "[1,2,g0; tail=-1]")
    assert result.exit_code == 0
    assert payload["family"] == "XSlInf"
    assert payload["integrable"] is False
    assert payload["annihilator"] == "I(1,0;[];[])"


def test_degree():
    result, payload = invoke("degree", "--lambda", "2,1,0")
    assert result.exit_code == 0
    assert (payload["dim"], payload["deg"]) == (8, 2)


def test_verify_exits_cleanly():
    result, payload = invoke("verify", "--suite", "branching", "--seed", "7", "--budget", "0.1", "--threads", "2")
    assert result.exit_code == 0
    assert payload["suites"] == ["branching"]
    assert payload["failed"] == 0


def test_parse_error_reports_position():
    result, payload = invoke("classify", "--mu", "[1,2,x; tail=0]")
    assert result.exit_code == 2
    assert payload["error"] == "ParseError"
    assert "position" in payload


def test_unknown_suite_is_a_parse_error():
    result, payload = invoke("verify", "--suite", "nope")
    assert result.exit_code == 2


def test_bounds():
    result, payload = invoke("bound", "lem1", "1", "3")
    assert result.exit_code == 3
    assert payload["error"] == "HypothesisViolated"
    result, payload = invoke("bound", "lemma-deg", "g0,1,1,0,0")
    assert result.exit_code == 0
    assert payload["rhs"] == 3


def test_other_commands():
    result, payload = invoke("iso", "Lambda{odds}", "Lambda{2,3,5,7,...}")
    assert payload["isomorphic"] is True
    result, payload = invoke("annihilator", "--alg", "sp", "--mu", "[tail=0]")
    assert payload["label"] == "Isw"
    result, payload = invoke("support", "--weight", "2,1,0", "--module", "S(2,1)")
    assert payload["member"] is True
    result, payload = invoke("parse", "{1,3; period=2, pattern=10, start=5}")
    assert payload["kind"] == "set"
    result, payload = invoke("hw", "--borel", "[seq(1,2,3); dense{4,...}]", "--mu", "[-1,-1,g0; tail=0]")
    assert (payload["status"], payload["i0"], payload["a"]) == ("HighestWeight", 3, "g0")


def test_parse_listed_descending_block():
    result, payload = invoke("parse", "[asc{odds}; desc{6,4,2}]")
    assert result.exit_code == 0
    assert payload["kind"] == "borel"


def test_summaries_reach_a_redirected_stderr():
    result, payload = invoke("classify", "--alg", "sl", "--module", "Lambda{odds}")
    assert result.exit_code == 0
    assert payload["integrable"] is True
    assert "over sl(inf)" in result.output
    assert "[bold]" not in result.output
    result, _ = invoke("verify", "--suite", "core", "--seed", "7", "--budget", "0.05", "--threads", "1")
    assert "seed 7, budget 0.05" in result.output
