"""Expression parser and the command-line contract."""
from __future__ import annotations

import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleycoh.cli import ParseError, parse, parse_bundle, parse_complex
from cayleycoh.cli.main import EXIT_BLOCKED, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from cayleycoh.schur.bundles import SchurBundle
from cayleycoh.schur.expr import (
    BASES,
    PRESETS,
    ComplexExpressionError,
    Preset,
    SchurOf,
    Shift,
    Sum,
    Sym,
    Taut,
    Tensor,
    Twist,
    Wedge,
    to_text,
)

# --- parser -------------------------------------------------------------------
weights = st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(lambda w: tuple(sorted(w, reverse=True)))
leaves = st.one_of(
    st.sampled_from(("O",) + BASES).map(Taut),
    st.builds(SchurOf, weights, st.sampled_from(BASES)),
    st.builds(Wedge, st.integers(0, 4), st.sampled_from(BASES)),
    st.builds(Sym, st.integers(0, 4), st.sampled_from(BASES)),
    st.sampled_from(PRESETS).map(Preset),
)
ints = st.integers(-5, 5)
trees = st.recursive(
    leaves,
    lambda kids: st.one_of(
        st.lists(kids, min_size=2, max_size=3).map(lambda xs: Sum(tuple(xs))),
        st.lists(kids, min_size=2, max_size=3).map(lambda xs: Tensor(tuple(xs))),
        st.builds(Twist, kids, ints),
        st.builds(Shift, kids, ints),
    ),
    max_leaves=8,
)


@given(trees)
@settings(max_examples=300, deadline=None)
def test_parse_print_round_trip(node):
    assert parse(to_text(node)) == node


@pytest.mark.parametrize(
    "text, b",
    [("S{2,1}U*", (2, 1, 0)), ("W2(U*)(1)", (2, 2, 1)), ("W2U*(1)", (2, 2, 1)), ("O(-1)", (-1, -1, -1))],
)
def test_bundle_examples(text, b):
    (atom, m), = parse_bundle(text)
    assert atom == SchurBundle.from_b(b) and m == 1


def test_precedence_and_associativity():
    assert parse("O + U * Q + Uperp") == Sum((Taut("O"), Tensor((Taut("U"), Taut("Q"))), Taut("Uperp")))
    assert parse("(O + U) * Q") == Tensor((Sum((Taut("O"), Taut("U"))), Taut("Q")))


def test_dual_marker_versus_product():
    assert parse("U*(1)") == Twist(Taut("U*"), 1)
    assert parse("U * O") == Tensor((Taut("U"), Taut("O")))
    assert parse("U* * O") == Tensor((Taut("U*"), Taut("O")))


@pytest.mark.parametrize("text", ["S{2,2}X", "S{1,2}U", "U +", "W-1U", "(O", "O(x)", "S{}U", "O O"])
def test_syntax_errors_are_positioned(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert "column" in str(info.value) and 0 <= info.value.pos <= len(text)


def test_shift_is_rejected_for_bundles_only():
    with pytest.raises(ComplexExpressionError):
        parse_bundle("O[1]")
    with pytest.raises(ComplexExpressionError):
        parse_bundle("R")
    assert parse_complex("R(1)[2]").terms


# --- commands -----------------------------------------------------------------
def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_coh_cg_example(capsys):
    code, out, _ = run(capsys, "--format", "json", "coh", "--space", "cg", "S{0,0,-3}U*")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema"] == 1
    (deg,) = doc["result"]["degrees"]
    assert deg["degree"] == 2 and deg["dim"] == 1
    assert deg["reps"][0]["weight"] == [-1] * 7  # a det power, i.e. k


def test_coh_gr_differs(capsys):
    code, out, _ = run(capsys, "coh", "--space", "gr", "S{0,0,-3}U*")
    assert code == EXIT_OK and "= 0" in out


def test_euler_o_o(capsys):
    code, out, _ = run(capsys, "euler", "O", "O")
    assert code == EXIT_OK and out.strip() == "1"


def test_indeterminate_exits_2(capsys):
    code, out, _ = run(capsys, "coh", "O(1)")
    assert code == EXIT_BLOCKED and "indeterminate" in out


@pytest.mark.parametrize(
    "argv",
    [["coh", "S{2,2}X"], ["frobnicate"], ["coh", "--space", "gr", "R"], ["--jobs", "x", "table"], ["check-collection"]],
)
def test_usage_errors_exit_64(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == EXIT_USAGE


def test_check_collection_builtin(capsys):
    code, out, _ = run(capsys, "--format", "json", "check-collection", "--builtin", "cg15")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["verdict"] == "EXCEPTIONAL"
    assert len(doc["result"]["grid"]) == 15 and doc["result"]["unresolved"] == []


def test_check_collection_print(capsys):
    code, out, _ = run(capsys, "check-collection", "--builtin", "cg15", "--print")
    assert code == EXIT_OK
    assert out.splitlines()[:5] == ["O", "U*", "W2U*", "R", "S21U*"]


def test_collection_file(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("# two blocks\nO\nU*\n--- block\nO(1)\nU*(1)\n")
    assert run(capsys, "check-collection", str(good))[0] == EXIT_OK
    bad = tmp_path / "bad.txt"
    bad.write_text("U*\nO\n")
    assert run(capsys, "check-collection", str(bad))[0] == EXIT_FAIL
    broken = tmp_path / "broken.txt"
    broken.write_text("O\nS{1,2}U\n")
    code, _, err = run(capsys, "check-collection", str(broken))
    assert code == EXIT_USAGE and "broken.txt:2" in err


def test_table_golden_round_trip(tmp_path, capsys):
    golden = tmp_path / "table.md"
    assert run(capsys, "--format", "markdown", "table", "--out", str(golden))[0] == EXIT_OK
    assert run(capsys, "--format", "markdown", "table", "--check", str(golden))[0] == EXIT_OK
    first = golden.read_text()
    assert run(capsys, "--format", "markdown", "table", "--out", str(tmp_path / "again.md"))[0] == EXIT_OK
    assert (tmp_path / "again.md").read_text() == first


def test_table_injected_failing_golden(tmp_path, capsys):
    golden = tmp_path / "table.md"
    run(capsys, "--format", "markdown", "table", "--out", str(golden))
    golden.write_text(golden.read_text().replace("k[-2]", "0", 1))
    code, _, err = run(capsys, "--format", "markdown", "table", "--check", str(golden))
    assert code == EXIT_FAIL and "+++ computed" in err


def test_table_marks_three_shaded_cells(capsys):
    code, out, _ = run(capsys, "--format", "json", "table")
    entries = json.loads(out)["result"]["entries"]
    shaded = sorted(e["weight"] for e in entries if e["shaded"])
    assert code == EXIT_OK and shaded == [[0, 0, -3], [1, 1, -1], [2, 1, -1]]


def test_json_round_trips(capsys):
    _, out, _ = run(capsys, "--format", "json", "ext", "W2Q", "W2U*")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc)) == doc


def test_g2_commands(capsys):
    assert run(capsys, "g2", "forms")[0] == EXIT_OK
    assert run(capsys, "g2", "bracket")[0] == EXIT_OK
    assert run(capsys, "g2", "conic")[0] == EXIT_OK
    code, out, _ = run(capsys, "g2", "bracket", "a", "b")
    assert code == EXIT_OK and out.strip() == "-2*e-c"
    code, out, _ = run(capsys, "g2", "segre", "--example")
    assert "quadric rank 10" in out
    assert run(capsys, "g2", "bracket", "a")[0] == EXIT_USAGE


def test_g2_ilambda_reports_the_mismatch(capsys):
    code, out, _ = run(capsys, "g2", "ilambda")
    assert code == EXIT_FAIL
    assert [line.split(" =")[0] for line in out.splitlines() if "MISMATCH" in line] == ["P2 i(ea^eb)"]


def test_verify_all_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code_a = main(["--format", "json", "--seed", "3", "verify-all", "--out", str(a)])
    code_b = main(["--format", "json", "--seed", "3", "verify-all", "--out", str(b), "--jobs", "2"])
    assert a.read_text() == b.read_text()
    assert code_a == code_b


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cayleycoh", "euler", "O", "U*"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "7"
