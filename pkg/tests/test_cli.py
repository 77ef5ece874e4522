import json

import pytest

from trigonal.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "D(4,-3)")
    assert code == EXIT_OK
    assert out.strip() == '{"alpha":11,"beta":3,"residues":[3,4]}'


def test_eval_pretty(capsys):
    _, out, _ = run(capsys, "eval", "C(3,1,2)", "--pretty")
    assert json.loads(out) == {"alpha": 11, "beta": 3, "residues": [3, 4]}
    assert "\n  " in out


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", "D(4,-3)")
    assert code == EXIT_OK and out.strip() == "C(3,1,2)"


def test_same_link(capsys):
    _, out, _ = run(capsys, "same-link", "D(4,-3)", "C(3,1,2)")
    assert json.loads(out)["same"] is True
    _, out, _ = run(capsys, "same-link", "D(4,-3)", "D(5)")
    assert json.loads(out)["same"] is False


def test_moves(capsys):
    code, out, _ = run(capsys, "moves", "D(4,-3)")
    assert code == EXIT_OK and json.loads(out) == []
    _, out, _ = run(capsys, "moves", "D(2,1,-1,-2)")
    rows = json.loads(out)
    assert rows[0] == {"rule": "FIVE_SLIDE", "at": 0, "neg": True, "rev": False,
                       "crossing_delta": -1, "complexity_delta": -4}


def test_simplify_trace(capsys):
    code, out, _ = run(capsys, "simplify", "D(2,1,-1,-2)", "--trace")
    assert code == EXIT_OK
    assert out.strip() == "D(2,1,-1,-2) --FIVE_SLIDE~neg@0--> D(5)"


def test_simplify_json(capsys):
    code, out, _ = run(capsys, "simplify", "D(2,2,-1,2,2)")
    data = json.loads(out)
    assert code == EXIT_OK and data["reached"] and data["final"] == "D(5)"


def test_simplify_not_reached(capsys):
    code, out, _ = run(capsys, "simplify", "D(4,-3)")
    assert code == EXIT_FAIL
    assert json.loads(out) == {"start": "D(4,-3)", "reached": False, "minimal": ["D(4,-3)"]}


def test_simplify_budget(capsys):
    code, _, err = run(capsys, "simplify", "D(2,2,-1,2,2)", "--max-states", "2")
    assert code == EXIT_BUDGET and "budget" in err


def test_simple_and_hard(capsys):
    _, out, _ = run(capsys, "simple", "D(4,-3)")
    assert json.loads(out)["simple"] is True
    _, out, _ = run(capsys, "hard", "D(2,2,1)")
    assert json.loads(out)["hard"] is False


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "awkward", "C(2,2,2)")
    assert code == EXIT_OK and out.strip() == "D(3,-1,-1,-2)"
    _, out, _ = run(capsys, "gen", "hard", "C(2,2,2)")
    assert out.strip() == "D(3,-2,3)"
    code, _, err = run(capsys, "gen", "hard", "C(1,2)")
    assert code == EXIT_USAGE and "error" in err


def test_scramble_deterministic(capsys):
    _, first, _ = run(capsys, "scramble", "D(5)", "--steps", "4", "--seed", "9")
    _, second, _ = run(capsys, "scramble", "D(5)", "--steps", "4", "--seed", "9")
    assert first == second and first.startswith("D(")


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-crossings", "3", "--max-length", "3", "--class", "3/1")
    assert code == EXIT_OK
    assert out.split() == ["D(3)", "D(-1,-2)", "D(2,1)", "D(-1,-1,-1)"]


def test_verify_json_deterministic(capsys):
    argv = ["verify", "moves", "--trials", "50", "--seed", "3", "--json", "--no-timing"]
    code, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert code == EXIT_OK and first == second
    data = json.loads(first)
    assert data["harness"] == "moves" and data["seed"] == 3 and data["elapsed_ms"] is None


def test_verify_thm1(capsys):
    code, out, _ = run(capsys, "verify", "thm1", "--class", "5/1")
    assert code == EXIT_OK and json.loads(out)["tested"] == 36


def test_verify_thm1_usage(capsys):
    code, _, _ = run(capsys, "verify", "thm1")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "verify", "thm1", "--class", "11/3")
    assert code == EXIT_USAGE


def test_verify_small_harnesses(capsys):
    for argv in (
        ["verify", "lemma", "--max-crossings", "10", "--max-length", "4", "--entry-bound", "4"],
        ["verify", "prop", "--max-crossings", "5", "--max-length", "3", "--entry-bound", "3"],
        ["verify", "gen", "--max-length", "3", "--entry-bound", "3"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_OK, argv
        assert json.loads(out)["failures"] == []


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "D(2,1,-1,-2)", "--dot")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0] == 'digraph "closure" {' and lines[-1] == "}"
    assert '\t"D(2,1,-1,-2)" [shape=doublecircle];' in lines
    assert '\t"D(2,1,-1,-2)" -> "D(5)" [label="FIVE_SLIDE~neg@0"];' in lines


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["eval"],
        ["eval", "D(x"],
        ["bogus"],
        ["enumerate", "--max-crossings", "3"],
        ["graph", "D(5)"],
        ["verify", "nope"],
        ["enumerate", "--max-crossings", "3", "--max-length", "3", "--class", "4/2"],
        ["simplify", "D(5)", "--max-states", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err
