"""CLI subcommands: output formats, exit codes, file round trips."""

import numpy as np
import pytest

from munchhausen import WeighingMatrix, parse_matrix, serialize_matrix
from munchhausen.bounds import chain_construction
from munchhausen.cli import run


@pytest.fixture
def chain3(tmp_path):
    p = tmp_path / "chain3.munch"
    p.write_text(serialize_matrix(chain_construction(3)))
    return str(p)


@pytest.fixture
def dup(tmp_path):
    M = WeighingMatrix(np.array([[1, 1, -1], [0, 0, 1]], dtype=np.int8))
    p = tmp_path / "dup.munch"
    p.write_text(serialize_matrix(M))
    return str(p)


class TestVerify:
    def test_unique(self, chain3, capsys):
        assert run(["verify", chain3]) == 0
        assert capsys.readouterr().out == "MUNCHHAUSEN\nsigns: ++\n"

    def test_oracle_flag(self, chain3, capsys):
        assert run(["verify", chain3, "--oracle"]) == 0
        assert capsys.readouterr().out == "MUNCHHAUSEN\nsigns: ++\n"

    def test_ambiguous_exit_3(self, dup, capsys):
        assert run(["verify", dup]) == 3
        out = capsys.readouterr().out
        assert out.startswith("AMBIGUOUS\nsigns: 0+\nwitness: 2 1 3")

    def test_missing_file_exit_2(self, capsys):
        assert run(["verify", "/nonexistent.munch"]) == 2

    def test_malformed_file_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.munch"
        p.write_text("munch v1\n1 2\n-+0\n")
        assert run(["verify", str(p)]) == 2

    def test_budget_exit_4(self, tmp_path, capsys):
        p = tmp_path / "chain9.munch"
        p.write_text(serialize_matrix(chain_construction(9)))
        assert run(["verify", str(p), "--budget", "2"]) == 4


class TestSolve:
    def test_solve_4(self, capsys, tmp_path):
        wpath = tmp_path / "w.munch"
        assert run(["solve", "4", "--witness-out", str(wpath)]) == 0
        out = capsys.readouterr().out
        assert out == "B(4) = 2\nminimality: proven\n"
        M = parse_matrix(wpath.read_text())
        assert (M.k, M.n) == (2, 4)

    def test_witness_reverifies(self, capsys, tmp_path):
        wpath = tmp_path / "w.munch"
        assert run(["solve", "3", "--witness-out", str(wpath)]) == 0
        capsys.readouterr()
        assert run(["verify", str(wpath)]) == 0

    def test_out_of_cap_exit_2(self, capsys):
        assert run(["solve", "10"]) == 2

    def test_budget_exit_4(self, capsys):
        assert run(["solve", "4", "--budget", "1"]) == 4


class TestSequence:
    def test_stdout_and_file(self, capsys, tmp_path):
        b = tmp_path / "b.txt"
        assert run(["sequence", "3", "--bfile", str(b)]) == 0
        out = capsys.readouterr().out
        assert out == "1 0\n2 1\n3 2\n"
        assert b.read_text() == out


class TestBounds:
    def test_table(self, capsys):
        assert run(["bounds", "4"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "k\tr_floor\tl_min\tn_lb"
        assert lines[-1] == "4\t2\t1\t1"
        assert len(lines) == 6


class TestExclude:
    def test_excluded(self, capsys):
        assert run(["exclude", "81", "4"]) == 0
        assert capsys.readouterr().out == "EXCLUDED\n"

    def test_not_excluded(self, capsys):
        assert run(["exclude", "80", "4"]) == 0
        assert capsys.readouterr().out == "NOT-EXCLUDED\n"


class TestProofCheck:
    def test_chain(self, chain3, capsys):
        assert run(["proof-check", chain3]) == 0
        out = capsys.readouterr().out
        assert "stabilizer-size: 2" in out
        assert "audit: INJECTIVE" in out

    def test_collision_report(self, tmp_path, capsys):
        from munchhausen import full_matrix

        p = tmp_path / "full4.munch"
        p.write_text(serialize_matrix(full_matrix(4)))
        assert run(["proof-check", str(p)]) == 0
        out = capsys.readouterr().out
        assert "audit: COLLISION" in out
        assert "sigma1:" in out and "sigma2:" in out


class TestCounterexampleFull:
    def test_k4(self, capsys, tmp_path):
        out_file = tmp_path / "w.txt"
        assert run(["counterexample-full", "4", "--out", str(out_file)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("witness: ")
        weights = [int(x) for x in out.split(":")[1].split()]
        assert sorted(weights) == list(range(1, 82))
        assert weights != list(range(1, 82))
        assert out_file.read_text().split() == [str(w) for w in weights]


class TestChain:
    def test_write_and_verify(self, capsys, tmp_path):
        p = tmp_path / "c.munch"
        assert run(["chain", "5", "--out", str(p)]) == 0
        capsys.readouterr()
        assert run(["verify", str(p)]) == 0


class TestUsage:
    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_no_args(self, capsys):
        assert run([]) == 2
