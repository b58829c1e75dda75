"""The command-line surface: output shapes, exit codes, golden stability."""

import json
import pathlib
import subprocess
import sys

import pytest

from cl07.cli import main

GOLDENS = pathlib.Path(__file__).parent / "goldens"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_proc(*argv):
    return subprocess.run(
        [sys.executable, "-m", "cl07.cli", *argv],
        capture_output=True,
    )


def golden(name):
    return (GOLDENS / name).read_text(encoding="utf-8")


class TestEval:
    def test_value(self, capsys):
        code, out, err = run_cli(capsys, "eval", "circ(e2, e5)")
        assert (code, out, err) == (0, "-1 e3\n", "")

    def test_fold_flags_reach_the_evaluator(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "circU(e2^e7; e1, e4)")
        assert (code, out) == (0, "1 e2\n")
        code, out, _ = run_cli(capsys, "eval", "--fold-right", "desc",
                               "circU(e2^e7; e1, e4)")
        assert (code, out) == (0, "-1 e2\n")

    def test_json_output(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "circU(e2^e7; e1, e4)", "--json")
        assert code == 0
        assert out == golden("eval_circ_u.json")
        assert json.loads(out) == {"blades": {"2": "1"}}

    def test_evaluation_error_is_one_line_on_stderr(self, capsys):
        code, out, err = run_cli(capsys, "eval", "x + 1")
        assert code == 1
        assert out == ""
        assert err == "error[UnboundVariable]: unbound variable 'x' at 1:1\n"

    def test_parse_error_exits_one(self, capsys):
        code, _, err = run_cli(capsys, "eval", "e2^e1")
        assert code == 1
        assert err.startswith("error[SyntaxError]:")


class TestUsageErrors:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_eunits_table_needs_a_steer(self, capsys):
        code, out, err = run_cli(capsys, "table", "eunits")
        assert code == 2
        assert err == "error[Usage]: table eunits needs --u\n"

    def test_bad_lemma_scope(self, capsys):
        code, _, err = run_cli(capsys, "laws", "--lemma", "1",
                               "--scope", "grade9")
        assert code == 2
        assert err.startswith("error[Usage]:")


class TestTables:
    def test_circ_grid_matches_the_golden(self, capsys):
        code, out, _ = run_cli(capsys, "table", "circ")
        assert code == 0
        assert out == golden("table_circ.txt")
        row_e5 = next(l for l in out.splitlines() if l.startswith(" e5"))
        assert row_e5.split("|")[1].split() == \
            ["e5", "-e6", "e3", "-e2", "-e7", "-1", "e1", "e4"]

    def test_eunits_grid_matches_the_golden(self, capsys):
        code, out, _ = run_cli(capsys, "table", "eunits", "--u", "e1^e2^e4")
        assert code == 0
        assert out == golden("table_eunits_e124.txt")
        assert "pattern comparison: matched 20/49, anticommuting pairs 18/42" in out

    def test_degenerate_steer_is_an_evaluation_error(self, capsys):
        code, out, err = run_cli(capsys, "table", "eunits", "--u", "e2^e7")
        assert code == 1
        assert out == ""
        assert err == "error[Degenerate]: E6 has no imaginary part: 1 at 1:1\n"


class TestLaws:
    def test_holding_lemma_text(self, capsys):
        code, out, _ = run_cli(capsys, "laws", "--lemma", "5")
        assert code == 0
        assert "lemma5" in out
        assert "holds" in out
        assert "cases=896" in out

    def test_failing_lemma_lists_grade_deviations(self, capsys):
        code, out, _ = run_cli(capsys, "laws", "--lemma", "3")
        assert code == 0
        assert "fails" in out
        assert "grade 4: 28/245 deviate (mixed)" in out

    def test_expect_paper_gates_the_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "laws", "--lemma", "5", "--expect-paper")
        assert (code, err) == (0, "")
        code, _, err = run_cli(capsys, "laws", "--lemma", "2", "--expect-paper")
        assert code == 3
        assert "deviations from the claimed forms: lemma2" in err

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "laws", "--lemma", "6", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["header"]["conventions"]["fold_left"] == "ascending"
        result = report["results"][0]
        assert result["law"] == "lemma6"
        assert result["status"] == "fails"
        assert "elapsed" not in result

    def test_scope_flag(self, capsys):
        code, out, _ = run_cli(capsys, "laws", "--lemma", "1",
                               "--scope", "grade2", "--json")
        assert code == 0
        assert json.loads(out)["results"][0]["cases"] == 1029


class TestExamples:
    def test_fourth_replay_golden(self, capsys):
        code, out, _ = run_cli(capsys, "examples", "--n", "4")
        assert code == 0
        assert out == golden("example_4.txt")

    def test_fifth_replay_golden(self, capsys):
        code, out, _ = run_cli(capsys, "examples", "--n", "5")
        assert code == 0
        assert out == golden("example_5.txt")
        assert out.rstrip().endswith("verdict: holds (counterexample reproduced)")

    def test_all_five_run_in_sequence(self, capsys):
        code, out, _ = run_cli(capsys, "examples")
        assert code == 0
        for n in range(1, 6):
            assert f"=== example {n} ===" in out
        assert "derivation deviates from the table" in out
        assert "claimed values not reproduced" in out


class TestMoufang:
    def test_holding_identity(self, capsys):
        code, out, _ = run_cli(capsys, "moufang", "--product", "circ",
                               "--identity", "1", "--trials", "50")
        assert code == 0
        assert "moufang1[circ] [trials=50 seed=0]: holds  held 50/50" in out

    def test_failing_identity_prints_witnesses(self, capsys):
        code, out, _ = run_cli(capsys, "moufang", "--product", "circ",
                               "--identity", "3", "--trials", "20")
        assert code == 0
        assert "moufang3[circ] [trials=20 seed=0]: fails  held 0/21" in out
        assert "witness: pinned=True, A=1, B=1 e1, C=1 e2" in out
        assert "lhs ['1 e4']  rhs ['-1 e4', '-1 e4']" in out

    def test_steer_expression(self, capsys):
        code, out, _ = run_cli(capsys, "moufang", "--product", "circ_1u",
                               "--identity", "1", "--trials", "10",
                               "--u", "e2^e7")
        assert code == 0
        assert "fails  held 0/10" in out


class TestScans:
    def test_sigma_text(self, capsys):
        code, out, _ = run_cli(capsys, "sigma-scan")
        assert code == 0
        assert "sigma_scan: fails  cases=2184" in out
        assert ("fold ascending/descending: uniform +1 ['1'], "
                "uniform -1 ['1 e1^e2^e3^e4^e5^e6^e7'], mixed 126") in out

    def test_sigma_json_golden(self, capsys):
        code, out, _ = run_cli(capsys, "sigma-scan", "--json")
        assert code == 0
        assert out == golden("sigma_scan.json")

    def test_thm1_text(self, capsys):
        code, out, _ = run_cli(capsys, "thm1", "--samples", "60", "--seed", "11")
        assert code == 0
        assert "theorem1 [samples=60 seed=11]:" in out
        assert "counts:" in out

    def test_thm1_json_records_every_case(self, capsys):
        code, out, _ = run_cli(capsys, "thm1", "--samples", "60",
                               "--seed", "11", "--json")
        assert code == 0
        result = json.loads(out)["results"][0]
        assert result["cases"] == 60
        assert len(result["witnesses"]) == 60


class TestByteStability:
    @pytest.mark.parametrize(
        "argv",
        [
            ("table", "circ"),
            ("laws", "--lemma", "3", "--json"),
            ("examples", "--n", "5"),
            ("thm1", "--samples", "40", "--seed", "7", "--json"),
        ],
    )
    def test_repeat_invocations_are_identical(self, argv):
        first = run_proc(*argv)
        second = run_proc(*argv)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stderr == second.stderr == b""

    def test_subprocess_output_matches_the_golden(self):
        out = run_proc("table", "circ").stdout
        assert out.decode("utf-8") == golden("table_circ.txt")
