import json
import subprocess
import sys

import pytest

from tperfect.cli import main
from tperfect.graph import are_isomorphic, parse_edge_list, parse_graph6
from tperfect.patterns import complete, cycle, figure3


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def c5_file(tmp_path):
    p = tmp_path / "c5.txt"
    p.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.g6"
    p.write_text("C~\n")
    return str(p)


class TestGen:
    def test_wheel_3_is_k4(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "wheel", "3")
        assert code == 0
        assert are_isomorphic(parse_edge_list(out), complete(4))

    def test_graph6_output(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "complete", "4", "--graph6")
        assert code == 0 and out.strip() == "C~"

    def test_figure3_with_flags(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "figure3", "b", "u1-", "u3-")
        expected, _ = figure3("b", ["u1-", "u3-"])
        assert code == 0
        assert are_isomorphic(parse_edge_list(out), expected)

    def test_unknown_name(self, capsys):
        code, _, err = run_cli(capsys, "gen", "nonsense")
        assert code == 1 and "error:" in err


class TestRecognize:
    def test_c5_accepted(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "recognize", c5_file)
        assert code == 0
        assert "answer: t-perfect" in out

    def test_k4_rejected_exit_zero(self, capsys, k4_file):
        # a definite negative answer is still a successful run
        code, out, _ = run_cli(capsys, "recognize", k4_file)
        assert code == 0
        assert "answer: not-t-perfect" in out
        assert '"pattern": "K4"' in out

    def test_fork_input_is_exit_one(self, capsys, tmp_path):
        p = tmp_path / "fork.txt"
        p.write_text("5 4\n0 1\n0 2\n0 3\n3 4\n")
        code, _, err = run_cli(capsys, "recognize", str(p))
        assert code == 1 and "fork" in err

    def test_budget_exhaustion_is_exit_two(self, capsys, tmp_path):
        p = tmp_path / "c7.txt"
        p.write_text("7 7\n" + "\n".join(f"{i} {(i + 1) % 7}" for i in range(7)) + "\n")
        code, out, _ = run_cli(capsys, "recognize", str(p), "--budget", "1")
        assert code == 2
        assert "inconclusive" in out

    def test_stdin_dash(self, tmp_path, c5_file):
        with open(c5_file) as fh:
            proc = subprocess.run(
                [sys.executable, "-m", "tperfect.cli", "recognize", "-"],
                stdin=fh, capture_output=True, text=True,
            )
        assert proc.returncode == 0
        assert "answer: t-perfect" in proc.stdout

    def test_json_report(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "recognize", c5_file, "--json")
        assert code == 0
        report = json.loads(out)
        assert set(report) == {
            "command", "input_sha256", "payload",
            "fallback_steps_used", "wall_time_s",
        }
        assert report["command"] == ["recognize", c5_file, "--json"]
        assert len(report["input_sha256"]) == 64
        assert report["payload"]["answer"] == "t-perfect"
        assert "t-minor-search" in report["fallback_steps_used"]

    def test_figure_written(self, capsys, tmp_path, c5_file):
        fig = tmp_path / "out.png"
        code, _, _ = run_cli(capsys, "recognize", c5_file, "--figure", str(fig))
        assert code == 0 and fig.stat().st_size > 0


class TestColor:
    def test_c5_three_classes(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "color", c5_file)
        assert code == 0
        assert "colors used: 3" in out

    def test_not_t_perfect_is_exit_one(self, capsys, k4_file):
        code, _, err = run_cli(capsys, "color", k4_file)
        assert code == 1 and "not t-perfect" in err

    def test_json_and_figure(self, capsys, tmp_path, c5_file):
        fig = tmp_path / "col.png"
        code, out, _ = run_cli(
            capsys, "color", c5_file, "--json", "--figure", str(fig)
        )
        assert code == 0
        report = json.loads(out)
        assert report["payload"]["num_colors"] == 3
        assert sorted(map(len, report["payload"]["classes"])) == [1, 2, 2]
        assert fig.stat().st_size > 0


class TestOracle:
    def test_k4_fractional_vertex(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "oracle", k4_file)
        assert code == 0
        assert "t-perfect: no" in out
        assert "(1/3, 1/3, 1/3, 1/3)" in out

    def test_c5_integral(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "oracle", c5_file)
        assert code == 0
        assert "t-perfect: yes" in out
        assert "polytope vertices: 11" in out

    def test_strong_mode(self, capsys, c5_file):
        code, out, _ = run_cli(
            capsys, "oracle", c5_file, "--mode", "strong", "--wmax", "2"
        )
        assert code == 0
        assert "pass up to w_max=2" in out

    def test_strong_violation_json(self, capsys, k4_file):
        code, out, _ = run_cli(
            capsys, "oracle", k4_file, "--mode", "strong", "--json"
        )
        assert code == 0
        payload = json.loads(out)["payload"]
        assert payload["passed"] is False
        assert payload["violation"]["alpha_w"] < payload["violation"]["cover_cost"]


class TestTMinor:
    def test_k4_script(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "tminor", k4_file)
        assert code == 0
        assert out.strip().endswith("target W3")

    def test_c5_none(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "tminor", c5_file)
        assert code == 0
        assert "no forbidden t-minor" in out

    def test_budget(self, capsys, tmp_path):
        p = tmp_path / "c9.txt"
        p.write_text("9 9\n" + "\n".join(f"{i} {(i + 1) % 9}" for i in range(9)) + "\n")
        code, out, _ = run_cli(capsys, "tminor", str(p), "--budget", "1")
        assert code == 2 and "inconclusive" in out


class TestHoles:
    def test_c5_single_hole(self, capsys, c5_file):
        code, out, _ = run_cli(capsys, "holes", c5_file)
        assert code == 0
        assert out.splitlines() == ["0 1 2 3 4"]

    def test_min_validation(self, capsys, c5_file):
        code, _, err = run_cli(capsys, "holes", c5_file, "--min", "2")
        assert code == 1 and "error:" in err


class TestCorpus:
    CORPUS = "C~\nDqK\nBW\n"  # K4, C5, path

    def test_tsv_and_determinism(self, capsys, tmp_path):
        src = tmp_path / "corpus.g6"
        src.write_text(self.CORPUS)
        outputs = []
        for name in ("a.tsv", "b.tsv"):
            dest = tmp_path / name
            code, _, _ = run_cli(capsys, "corpus", str(src), "--output", str(dest))
            assert code == 0
            outputs.append(dest.read_bytes())
        assert outputs[0] == outputs[1]
        lines = outputs[0].decode().splitlines()
        assert lines[0] == "graph6\tn\tm\trecognize\ttminor_free\tpolytope\tconsistent"
        assert all(line.endswith("\tTrue") for line in lines[1:])
        assert lines[1].startswith("C~\t4\t6\tnot-t-perfect\tFalse\tFalse")

    def test_fork_rows_skipped(self, capsys, tmp_path):
        # DsC is the fork in graph6
        src = tmp_path / "corpus.g6"
        src.write_text("DsC\nC~\n")
        dest = tmp_path / "out.tsv"
        code, _, _ = run_cli(capsys, "corpus", str(src), "--output", str(dest))
        assert code == 0
        lines = dest.read_text().splitlines()
        assert "fork-input" in lines[1] and lines[1].endswith("skipped")

    def test_figure_written(self, capsys, tmp_path):
        src = tmp_path / "corpus.g6"
        src.write_text(self.CORPUS)
        fig = tmp_path / "summary.png"
        code, _, _ = run_cli(
            capsys, "corpus", str(src), "--output", str(tmp_path / "o.tsv"),
            "--figure", str(fig),
        )
        assert code == 0 and fig.stat().st_size > 0

    def test_bad_line_is_exit_one(self, capsys, tmp_path):
        src = tmp_path / "corpus.g6"
        src.write_text("!!!not graph6!!!\n")
        code, _, err = run_cli(capsys, "corpus", str(src))
        assert code == 1 and "error:" in err


class TestInvocation:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 1 and "error:" in err

    def test_unknown_flag(self, capsys, c5_file):
        code, _, err = run_cli(capsys, "recognize", c5_file, "--wat")
        assert code == 1 and "error:" in err

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "recognize", "/no/such/file")
        assert code == 1 and "cannot read" in err

    def test_empty_input(self, capsys, tmp_path):
        p = tmp_path / "empty.txt"
        p.write_text("\n")
        code, _, err = run_cli(capsys, "recognize", str(p))
        assert code == 1 and "empty" in err
