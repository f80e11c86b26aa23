import shutil
import subprocess
import sys

import pytest

from resdel.cli import main
from resdel.io import parse_instance

CHAIN = "p rd 3 2 3\ne 1 2\ne 2 3\n"
FORK = "p rd 3 2 2\ne 1 2\ne 1 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def test_solve_yes(write, capsys):
    assert main(["solve", write("c.rd", CHAIN), "--lambda", "3"]) == 0
    assert capsys.readouterr().out == "s yes\nd 1 2\nd 2 3\n"


def test_solve_no(write, capsys):
    assert main(["solve", write("c.rd", CHAIN), "--lambda", "2", "--algo", "nonsink"]) == 1
    assert capsys.readouterr().out == "s no\n"


def test_solve_stats(write, capsys):
    assert main(["solve", write("f.rd", FORK), "--algo", "nonsink", "--stats"]) == 0
    out = capsys.readouterr().out
    assert "# nodes_explored" in out and "# rule RD.3 1" in out


def test_optimize(write, capsys):
    assert main(["optimize", write("f.rd", FORK)]) == 0
    assert capsys.readouterr().out.splitlines()[:2] == ["s yes", "l 2"]
    assert main(["optimize", write("cyc.rd", "p rd 2 2 1\ne 1 2\ne 2 1\n")]) == 1


def test_fractional(write, capsys):
    assert main(["fractional", write("f.rd", FORK)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "z 3/2"


def test_reduce_prints_trace_and_instance(write, capsys):
    assert main(["reduce", write("c.rd", CHAIN)]) == 0
    out = capsys.readouterr().out
    assert "# contract 1 2\n# contract 2 3\n" in out
    inst = parse_instance(out)
    assert len(inst.graph) == 1 and inst.graph.weight[1] == 3


def test_verify(write, capsys):
    inst = write("c.rd", CHAIN)
    assert main(["verify", inst, "--solution", write("ok.sol", "s yes\nd 1 2\nd 2 3\n")]) == 0
    assert capsys.readouterr().out == "ok\n"
    assert main(["verify", inst, "--solution", write("bad.sol", "s yes\nd 1 2\n")]) == 1
    assert "violation uncovered 2" in capsys.readouterr().out
    assert main(["verify", inst, "--lambda", "2", "--solution", write("ok.sol", "s yes\nd 1 2\nd 2 3\n")]) == 1


def test_gadget_sat(write, capsys):
    path = write("f.cnf", "p cnf 3 4\n1 2 3 0\n1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n")
    assert main(["gadget", "sat", "--in", path]) == 0
    assert capsys.readouterr().out.startswith("p rd 16 ")
    assert main(["gadget", "sat", "--in", path, "--solve"]) == 0
    assert "# assignment" in capsys.readouterr().out


def test_gadget_mmo_and_tvdp(write, capsys):
    assert main(["gadget", "mmo", "--in", write("m.txt", "p mmo 2 1 2\ne 1 2 2\n"), "--solve"]) == 0
    assert "# orient" in capsys.readouterr().out
    tv = write("t.txt", "p tvdp 4 2 1 2 3 4\ne 1 2\ne 3 4\n")
    assert main(["gadget", "tvdp", "--in", tv, "--solve"]) == 0
    out = capsys.readouterr().out
    assert "# path1 1 2" in out and "# path2 3 4" in out


def test_gen_round_trips(tmp_path, capsys):
    out = str(tmp_path / "g.rd")
    assert main(["gen", "--n", "6", "--t", "2", "--seed", "5", "--dag", "-o", out]) == 0
    inst = parse_instance(open(out).read())
    assert len(inst.graph.sinks) == 2


def test_errors_exit_two(write, capsys):
    assert main(["solve", write("bad.rd", "p rd 3 1 3\ne 1 4\n")]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["solve", "/nonexistent/file"]) == 2
    with pytest.raises(SystemExit) as info:
        main(["solve", "--bogus"])
    assert info.value.code == 2


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(CHAIN))
    assert main(["solve", "-"]) == 0


@pytest.mark.skipif(shutil.which("resdel") is None, reason="console script not installed")
def test_console_script(write):
    proc = subprocess.run(["resdel", "fractional", write("f.rd", FORK)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("z 3/2")
