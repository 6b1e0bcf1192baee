import math
from pathlib import Path

import pytest

from exhausters import parse_exhauster
from exhausters.cli import run_command

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fixture(name: str) -> str:
    return str(FIXTURES / name)


class TestEval:
    def test_counterexample_direction(self, capsys):
        code = run_command(["eval", fixture("counterexample.json"), "--dir", "1", "1"])
        assert code == 0
        assert float(capsys.readouterr().out.strip()) == pytest.approx(6.0, abs=1e-12)

    def test_missing_file(self, capsys):
        code = run_command(["eval", fixture("nope.json"), "--dir", "1", "0"])
        assert code == 2
        assert "error" in capsys.readouterr().err


class TestDiscard:
    def test_discardable_exits_zero(self, capsys):
        code = run_command(["discard", fixture("example3.json"), "--index", "0"])
        out = capsys.readouterr().out
        assert code == 0
        assert "verdict: discardable" in out
        assert "interval.0.witness: C1" in out
        assert "interval.1.witness: C2" in out

    def test_retained_exits_one(self, capsys):
        code = run_command(["discard", fixture("example4.json"), "--index", "0"])
        out = capsys.readouterr().out
        assert code == 1
        assert "verdict: retained" in out
        assert "contact.length" in out

    def test_bad_index_exits_two(self, capsys):
        code = run_command(["discard", fixture("example3.json"), "--index", "9"])
        assert code == 2
        assert "out of range" in capsys.readouterr().err


class TestReduce:
    def test_example3(self, tmp_path, capsys):
        out_path = tmp_path / "reduced.json"
        code = run_command(["reduce", fixture("example3.json"), "--out", str(out_path)])
        out = capsys.readouterr().out
        assert code == 0
        assert "removed: C0" in out
        assert "kept: C1,C2" in out
        reduced = parse_exhauster(out_path.read_text())
        assert reduced.labels == ("C1", "C2")

    def test_example4_identity(self, tmp_path, capsys):
        out_path = tmp_path / "reduced.json"
        code = run_command(["reduce", fixture("example4.json"), "--out", str(out_path)])
        out = capsys.readouterr().out
        assert code == 0
        assert "removed:" not in out
        assert parse_exhauster(out_path.read_text()).labels == ("C1", "C2", "C3", "C4")


class TestMinimal:
    def test_example4_exits_zero(self, capsys):
        code = run_command(["minimal", fixture("example4.json")])
        out = capsys.readouterr().out
        assert code == 0
        assert "verdict: minimal" in out
        assert out.count("status: kept") == 4
        assert "containment.violations: none" in out

    def test_example2_exits_one(self, capsys):
        code = run_command(["minimal", fixture("example2.json")])
        out = capsys.readouterr().out
        assert code == 1
        assert "verdict: not-minimal" in out
        assert "body.C0.status: removable" in out


class TestIntersect:
    def test_counterexample_vertices(self, capsys):
        code = run_command(
            ["intersect", fixture("counterexample.json"), "--indices", "0", "1"]
        )
        out = capsys.readouterr().out
        assert code == 0
        assert "kind: polygon" in out and "vertices: 4" in out
        assert "vertex.0: 1.0 2.0" in out

    def test_disjoint_prints_empty(self, tmp_path, capsys):
        doc = (
            '{"version": "1", "bodies": ['
            '{"type": "polygon", "vertices": [[0,0],[1,0],[1,1],[0,1]]},'
            '{"type": "polygon", "vertices": [[2,2],[3,2],[3,3],[2,3]]}]}'
        )
        path = tmp_path / "boxes.json"
        path.write_text(doc)
        code = run_command(["intersect", str(path), "--indices", "0", "1"])
        assert code == 0
        assert capsys.readouterr().out.strip() == "empty"

    def test_disc_operand_exits_two(self, capsys):
        code = run_command(["intersect", fixture("example5.json"), "--indices", "0", "1"])
        assert code == 2

    def test_bad_index_exits_two(self, capsys):
        code = run_command(["intersect", fixture("counterexample.json"), "--indices", "0", "5"])
        assert code == 2


class TestCurves:
    def test_csv_to_file(self, tmp_path):
        out_path = tmp_path / "curves.csv"
        code = run_command(
            ["curves", fixture("example4.json"), "--samples", "32", "--out", str(out_path)]
        )
        assert code == 0
        header = out_path.read_text().splitlines()[0]
        assert header == "theta,rho_C1,rho_C2,rho_C3,rho_C4,envelope"

    def test_svg_to_stdout(self, capsys):
        code = run_command(["curves", fixture("counterexample.json"), "--format", "svg"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.startswith("<svg") and 'id="envelope"' in out

    def test_too_few_samples_exits_two(self, capsys):
        code = run_command(["curves", fixture("example4.json"), "--samples", "4"])
        assert code == 2


class TestFlags:
    def test_tolerance_flags_accepted(self, capsys):
        code = run_command(
            [
                "minimal",
                fixture("example4.json"),
                "--tol",
                "1e-10",
                "--delta-min",
                "0.01",
            ]
        )
        assert code == 0

    def test_parse_error_exits_two(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"version": "1"')
        code = run_command(["eval", str(path), "--dir", "1", "0"])
        assert code == 2
        assert "parse error" in capsys.readouterr().err

    def test_unknown_command_exits_two(self, capsys):
        assert run_command(["frobnicate"]) == 2
