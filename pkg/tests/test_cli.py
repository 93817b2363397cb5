import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from regseq import io
from regseq.cli import main
from regseq.core import Colouring, InvalidInput, SortedSeq, TraceStep


@given(st.sets(st.integers(-(2**63), 2**63 - 1), max_size=30).map(sorted))
def test_set_round_trip(values):
    A = SortedSeq(values)
    text = io.format_set(A)
    assert io.parse_set(text) == A
    assert io.format_set(io.parse_set(text)) == text


def test_colouring_round_trip(tmp_path):
    c = Colouring(6, 3, [1, 2, 3, 3, 2, 1])
    path = tmp_path / "c.txt"
    io.write_colouring(path, c)
    raw = path.read_bytes()
    assert raw.startswith(b"6 3\n1\n2\n")
    back = io.read_colouring(path)
    assert back == c
    io.write_colouring(path, back)
    assert path.read_bytes() == raw


def test_trace_round_trip():
    steps = [TraceStep("lift", {"d": 3, "a": 5, "a_prime": 2}), TraceStep("convexify")]
    assert io.parse_trace(io.format_trace(steps)) == steps


def test_parse_errors():
    with pytest.raises(InvalidInput):
        io.parse_set("1\n3\n2\n")
    with pytest.raises(InvalidInput):
        io.parse_set("1\nx\n")
    with pytest.raises(InvalidInput):
        io.parse_colouring("3 2\n1\n2\n")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_difference(tmp_path, capsys):
    out_file = tmp_path / "a.txt"
    code, _, _ = run(capsys, "construct", "difference", "--n", "3", "--out", str(out_file))
    assert code == 0
    assert out_file.read_text() == "1\n17\n257\n273\n"


def test_construct_other_kinds(capsys):
    code, out, _ = run(capsys, "construct", "colouring", "--r", "2", "--M", "3")
    assert code == 0 and out.splitlines()[:2] == ["9 2", "1"]
    code, out, _ = run(capsys, "construct", "cantor", "--k", "2", "--K", "2")
    assert out.split() == ["6", "8", "14", "16"]
    code, out, _ = run(capsys, "construct", "density", "--k", "2")
    assert len(out.split()) == 108


def test_solve(tmp_path, capsys):
    f = tmp_path / "s.txt"
    io.write_set(f, range(1, 11))
    code, out, _ = run(capsys, "solve", "convex", "--in", str(f))
    assert code == 0 and out.splitlines()[0] == "4"
    code, out, _ = run(capsys, "solve", "rL", "--in", str(f), "--L", "3/2", "--json")
    assert json.loads(out)["length"] == 10
    io.write_set(f, [0, 1, 3, 7])
    plain = run(capsys, "solve", "r2", "--in", str(f))[1]
    oracle = run(capsys, "solve", "r2", "--in", str(f), "--oracle")[1]
    assert plain == oracle and plain.splitlines()[0] == "3"


def test_extract_with_trace(tmp_path, capsys):
    f, tr = tmp_path / "s.txt", tmp_path / "t.json"
    io.write_set(f, range(1, 730))
    code, out, _ = run(capsys, "extract", "dense-diff", "--in", str(f), "--trace", str(tr), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["length"] >= 3
    trace = json.loads(tr.read_text())
    assert trace[0]["kind"] == "ruzsa-colour"
    assert all(set(step) == {"kind", "params"} for step in trace)


def test_extract_colouring_and_regular(tmp_path, capsys):
    c = tmp_path / "c.txt"
    io.write_colouring(c, Colouring(729, 2, np.arange(729) % 2 + 1))
    code, out, _ = run(capsys, "extract", "colouring", "--in", str(c), "--json")
    assert code == 0 and json.loads(out)["colour"] == 1
    f = tmp_path / "s.txt"
    io.write_set(f, range(1, 101))
    assert run(capsys, "extract", "reg-convex", "--in", str(f))[1].splitlines()[1] == "3 15 35 63 99"
    assert run(capsys, "extract", "refine", "--in", str(f), "--l", "3")[0] == 0
    io.write_set(f, [0, 1, 3, 7])
    code, _, err = run(capsys, "extract", "refine", "--in", str(f))
    assert code == 1 and "not 2-regular" in err


def test_exit_codes(tmp_path, capsys):
    code, _, err = run(capsys, "solve", "r2", "--in", str(tmp_path / "missing.txt"))
    assert code == 1 and err.startswith("error:")
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "ruzsa", "--trials", "5", "--seed", "42")
    second = run(capsys, "verify", "ruzsa", "--trials", "5", "--seed", "42")
    assert first == second and first[0] == 0


def test_verify_difference_construction(capsys):
    code, out, _ = run(capsys, "verify", "difference-construction", "--n", "3")
    assert code == 0 and out.startswith("[PASS]")


def test_seed_env_var(monkeypatch, capsys):
    monkeypatch.setenv("RS_SEED", "9")
    a = run(capsys, "verify", "smaller-l", "--trials", "4")
    b = run(capsys, "verify", "smaller-l", "--trials", "4", "--seed", "9")
    assert a == b
