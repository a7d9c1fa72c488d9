import json
import subprocess
import sys

import pytest

from matrix_ansatz.cli import main, parse_expression


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "pasep", "DE") == (0, "q*a*b + a + b\n", "")
    assert run(capsys, "eval", "inversion", "DDD", "--at", "q=1")[1] == "6\n"
    assert run(capsys, "eval", "typeB", "D", "--at", "q=1,r=1")[1] == "1\n"
    assert run(capsys, "eval", "typeB", "D+E", "--at", "q=1,r=1")[1] == "2\n"
    assert run(capsys, "eval", "typeB", "(D+E)^3", "--at", "q=1,r=1")[1] == "48\n"


def test_eval_model_and_json(capsys):
    code, out, _ = run(capsys, "eval", "hermite_FU", "FU")
    assert (code, out) == (0, "1\n")
    code, out, _ = run(capsys, "eval", "pasep_motzkin", "DE", "--truncation", "4", "--format", "json")
    assert json.loads(out)["value"] == "q*a*b + a + b"


def test_parse_expression():
    ident = lambda s: s
    assert parse_expression("2*DE + ED", ident) == {"DE": 2, "ED": 1}
    assert parse_expression("(D+E)^2", ident) == {"DD": 1, "DE": 1, "ED": 1, "EE": 1}


def test_usage_errors(capsys):
    assert run(capsys, "eval", "nope", "DE")[0] == 2
    assert run(capsys, "eval", "pasep", "DX")[0] == 2
    assert run(capsys, "eval", "pasep", "DE", "--at", "q")[0] == 2
    assert run(capsys, "eval", "pasep", "DDD", "--truncation", "5")[0] == 2
    assert run(capsys, "eval", "pasep_motzkin", "DDD", "--truncation", "2")[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys, "table", "nope", "3")[0] == 2
    assert run(capsys, "dump-tableaux", "nope", "3")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "genocchi", "4")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass"
    assert all("elapsed" not in chk for chk in rep["checks"])
    code, out, _ = run(capsys, "verify", "pasep-triangle", "--nmax", "4", "--timings")
    assert code == 0 and "elapsed" in json.loads(out)["checks"][0]


def test_verify_failure_exit_code(capsys, monkeypatch):
    from matrix_ansatz import verify

    def broken(n_max):
        yield "always-wrong", lambda: (1, 2)

    monkeypatch.setitem(verify.SUITES, "broken", (broken, 1, "test"))
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_tables(capsys):
    code, out, _ = run(capsys, "table", "dumont-foata", "4", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "n,value" and lines[1] == "1,1" and lines[2] == "2,a*b + a*c + b*c"
    code, out, _ = run(capsys, "table", "q-stirling", "5", "json")
    rows = json.loads(out)["rows"]
    assert [3, 2, "q + 2"] in rows
    code, out, _ = run(capsys, "table", "big-q-hermite", "6", "json")
    assert json.loads(out)["rows"][2] == [2, "a^2 + 1"]
    code, out, _ = run(capsys, "table", "genocchi", "3", "--format", "csv")
    assert out.splitlines()[1:] == ["2,1", "4,1", "6,3"]


def test_dump_tableaux(capsys):
    code, out, _ = run(capsys, "dump-tableaux", "permutation", "DE")
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == 0 and sorted(d["weight"] for d in lines) == ["a", "b", "q*a*b"]
    for fam, arg, count in (("typeB", "DE", None), ("inversion", "3", 6), ("01", "2,1", 3),
                            ("rook-staircase", "3", 5), ("alternative", "1", 3), ("staircase", "2", None),
                            ("rook-young", "DE", None)):
        code, out, _ = run(capsys, "dump-tableaux", fam, arg)
        assert code == 0 and out
        if count is not None:
            assert len(out.splitlines()) == count


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and "pasep" in data["specs"] and "typeB" in data["models"]
    assert len(data["families"]) == 10
    assert run(capsys, "list", "nope")[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "all", "3"], ["table", "q-stirling", "5", "json"], ["eval", "pasep", "(D+E)^4"],
    ["dump-tableaux", "typeB", "DDE"], ["list"],
])
def test_deterministic_output(argv):
    outs = [subprocess.run([sys.executable, "-m", "matrix_ansatz", *argv], capture_output=True, text=True)
            for _ in range(2)]
    assert outs[0].returncode == 0
    assert outs[0].stdout == outs[1].stdout
