"""Command-line interface tests."""

import json
import subprocess
import sys

import pytest

from babylon.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_second_player_case(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--p", "3", "--q", "9")
        assert code == 0
        assert out.strip() == "second player wins (p+q even, p>=3)"

    def test_first_player_case(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--p", "2", "--q", "6")
        assert code == 0
        assert "first player wins" in out

    def test_one_color(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--one-color", "5")
        assert code == 0 and "second player wins" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--p", "3", "--q", "9",
                               "--format", "json")
        assert code == 0
        assert json.loads(out) == {
            "p": 3, "q": 9, "winner": "second", "reason": "p+q even, p>=3"
        }

    def test_validation_error(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--p", "9", "--q", "3")
        assert code == 2
        assert "error" in err


class TestSolve:
    def test_safe_state(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--state", "<2,2;2;2>")
        assert code == 0
        assert out.strip() == "safe: second player wins"

    def test_unsafe_state(self, capsys):
        code, out, _ = run_cli(capsys, "solve", "--state", "<2,6;;>")
        assert code == 0
        assert out.strip() == "unsafe: first player wins"

    def test_bound_exceeded(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--state", "<15,15;;>")
        assert code == 3
        assert "bound" in err

    def test_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--state", "nonsense")
        assert code == 2


class TestBest:
    def test_lists_winning_moves(self, capsys):
        code, out, _ = run_cli(capsys, "best", "--state", "r:1,1|b:1")
        assert code == 0
        assert "r@1>r@1" in out

    def test_lost_position(self, capsys):
        code, out, _ = run_cli(capsys, "best", "--state", "r:1,1,1")
        assert code == 0
        assert "every move loses" in out

    def test_scripted_hint_for_single_stack_endgame(self, capsys):
        code, out, _ = run_cli(
            capsys, "best", "--state", "r:4|b:1,1,3,3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["scripted"] == {"move": "b@3>b@3", "rule_tag": "lemma2.best-pair"}
        assert payload["scripted"]["move"] in payload["winning_moves"]

    def test_every_state_printed_reparses(self, capsys):
        from babylon.codec import parse_state

        code, out, _ = run_cli(capsys, "best", "--state", "<2,2;2;2>",
                               "--format", "json")
        parse_state(json.loads(out)["state"])


class TestVerifyCommand:
    def test_theorem_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "theorem",
                               "--max-n", "10")
        assert code == 0
        assert "result: PASS" in out

    def test_bob_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "bob",
                               "--p", "4", "--q", "6")
        assert code == 0

    def test_csv_output(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "theorem",
                               "--max-n", "8", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "p,q,n,claimed,solved,agree"

    def test_missing_args(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--suite", "bob")
        assert code == 2


class TestPlay:
    def test_scripted_game_over_stdin(self):
        # human plays first in a (4,4) game; engine should win every line
        script = "r@1>r@1\nr@1>b@1\nb@1>b@1\nmoves\nquit\n"
        proc = subprocess.run(
            [sys.executable, "-m", "babylon.cli", "play", "--p", "4", "--q", "4"],
            input=script, capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert "engine plays second" in proc.stdout
        assert "[opening.p4q4]" in proc.stdout

    def test_rejects_illegal_moves_without_advancing(self):
        script = "r@1>b@2\nquit\n"
        proc = subprocess.run(
            [sys.executable, "-m", "babylon.cli", "play", "--p", "3", "--q", "3"],
            input=script, capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert "rejected" in proc.stdout
        assert proc.stdout.count("state: r:1,1,1|b:1,1,1") >= 2

    def test_full_game_to_the_end(self):
        # feed winning first-player moves in a (1,3) game; engine is second
        script = "b@1>r@1\nb@2>b@2\n"
        proc = subprocess.run(
            [sys.executable, "-m", "babylon.cli", "play", "--p", "1", "--q", "3",
             "--side", "second"],
            input=script, capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert "game over" in proc.stdout
