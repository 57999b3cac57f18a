import pytest

from singbraid.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "-n", "3", "s1 s1^-1 t2")
    assert code == 0 and out == "t2\n"


def test_parse_reports_bad_token(capsys):
    code, out, err = run(capsys, "parse", "-n", "3", "s9")
    assert code == 2 and out == "" and "s9" in err


def test_pi_cycles_and_one_line(capsys):
    code, out, _ = run(capsys, "pi", "-n", "3", "s1 t2")
    assert code == 0 and out == "(1 3 2)\n"
    code, out, _ = run(capsys, "pi", "-n", "3", "--one-line", "s1 t2")
    assert code == 0 and out == "[3,1,2]\n"


def test_gens_table(capsys):
    code, out, _ = run(capsys, "gens", "-n", "3")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "rep\tletter\tambient\ttrivial"
    assert len(lines) == 25
    assert "1\tt1\tt1 s1^-1\tno" in lines
    assert "1\ts1\t1\tyes" in lines
    assert "s2 s1\ts1\ts2 s1^2 s2^-1\tno" in lines


def test_rewrite(capsys):
    code, out, _ = run(capsys, "rewrite", "s1^2")
    assert code == 0 and out == "a12\n"
    code, out, _ = run(capsys, "rewrite", "t1 s1^-1")
    assert code == 0 and out == "b12 a12^-1\n"
    code, _, err = run(capsys, "rewrite", "s1")
    assert code == 2 and "projection" in err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "a12 a13 a23")
    assert code == 0 and out == "d^1 | 1\n"
    code, out, _ = run(capsys, "nf", "b12^-1 a13 b12")
    assert code == 0 and out == "d^0 | b12^-1 a13 b12\n"
    code, out, _ = run(capsys, "nf", "--canonical", "a13 a23 b12 a23^-1 a13^-1")
    assert code == 0 and out == "d^0 | b12\n"


def test_nf_rejects_braid_letters(capsys):
    code, _, err = run(capsys, "nf", "t1")
    assert code == 2 and "t1" in err


def test_trivial(capsys):
    code, out, _ = run(capsys, "trivial", "-n", "3", "s1 t1 s1^-1 t1^-1")
    assert code == 0 and out == "trivial\n"
    code, out, _ = run(capsys, "trivial", "-n", "3", "t1 t2 t1 t2^-1 t1^-1 t2^-1")
    assert code == 1 and out == "nontrivial\n"
    code, _, err = run(capsys, "trivial", "-n", "4", "s1")
    assert code == 2 and "n = 3" in err


def test_equal(capsys):
    code, out, _ = run(capsys, "equal", "a12 b13 a12^-1", "a23^-1 b13 a23")
    assert code == 0 and out == "equal\n"
    code, out, _ = run(capsys, "equal", "b12", "b13")
    assert code == 1 and out == "not equal\n"


def test_conj(capsys):
    code, out, _ = run(capsys, "conj", "-g", "s1", "a23")
    assert code == 0 and out == "a13\n"
    code, out, _ = run(capsys, "conj", "-g", "s1^-1", "a13")
    assert code == 0 and out == "a23\n"
    code, _, err = run(capsys, "conj", "-g", "s1 s2", "a23")
    assert code == 2 and "single generator" in err


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "s1 t1 s1^-1 t1^-1")
    assert code == 0
    lines = dict(line.split("\t") for line in out.splitlines())
    assert lines["projection"] == "trivial"
    assert lines["crossing-sum"] == "0"
    assert lines["singular-sum"] == "0"
    assert lines["necessary-trivial"] == "yes"
    code, out, _ = run(capsys, "oracle", "t1 s1^-1")
    lines = dict(line.split("\t") for line in out.splitlines())
    assert lines["singular-sum"] == "1"
    assert lines["necessary-trivial"] == "no"


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    lines = out.splitlines()
    assert code == 0
    assert sum(line.startswith("PASS") for line in lines) == 81
    assert lines[-1] == "81/81 checks passed"


@pytest.mark.parametrize(
    "flag,count",
    [("--rs", 30), ("--theorem1", 8), ("--prop41", 24), ("--table", 19)],
)
def test_verify_subsets(capsys, flag, count):
    code, out, _ = run(capsys, "verify", flag)
    lines = out.splitlines()
    assert code == 0
    assert sum(line.startswith("PASS") for line in lines) == count


def test_verify_default_runs_everything(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and out.splitlines()[-1] == "81/81 checks passed"


def test_verify_failure_exits_3(capsys, monkeypatch):
    from singbraid import sp3 as sp3_module
    from singbraid.sp3 import parse_sp_word

    corrupted = dict(sp3_module.ACTION_TABLES[("s2", 1)])
    corrupted["a13"] = parse_sp_word("a23")
    monkeypatch.setitem(sp3_module.ACTION_TABLES, ("s2", 1), corrupted)
    code, out, _ = run(capsys, "verify", "--prop41")
    assert code == 3
    assert any(line.startswith("FAIL") for line in out.splitlines())
    assert out.splitlines()[-1] == "23/24 checks passed"


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "--all")
    second = run(capsys, "verify", "--all")
    assert first == second
    first = run(capsys, "gens", "-n", "4")
    second = run(capsys, "gens", "-n", "4")
    assert first == second
