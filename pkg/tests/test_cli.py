"""Tests for the command-line harness."""

import csv
import io
from fractions import Fraction as F

import pytest

from linecapture.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_report(out):
    return dict(line.split("=", 1) for line in out.strip().splitlines())


def parse_csv(out):
    return list(csv.DictReader(io.StringIO(out)))


class TestSimulate:
    def test_fk_away_worst_case(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--model", "fk", "--direction", "away",
            "--d", "1", "--v", "1/2", "--side", "-1", "--first-dir", "+1",
        )
        assert code == 0
        report = parse_report(out)
        assert report["cr"] == "5/1"
        assert report["capture_time"] == "10/1"
        assert int(report["turns_r1"]) + int(report["turns_r2"]) == 2

    def test_ns_toward_overtake(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--model", "ns", "--direction", "toward",
            "--d", "1", "--v", "3", "--side", "-1", "--first-dir", "+1",
        )
        assert code == 0
        report = parse_report(out)
        assert report["cr"] == "2/1"
        assert (report["turns_r1"], report["turns_r2"]) == ("0", "0")

    def test_dispatch_to_waiting(self, capsys):
        code, out, _ = run(
            capsys, "simulate", "--model", "nd", "--direction", "toward",
            "--v", "2", "--d", "5", "--side", "+1",
        )
        assert code == 0
        report = parse_report(out)
        assert report["alg"] == "wait"
        assert report["cr"] == "3/2"

    def test_invalid_scenario_is_a_usage_error(self, capsys):
        code, _, err = run(
            capsys, "simulate", "--model", "fk", "--direction", "away",
            "--d", "1", "--v", "2", "--side", "+1",
        )
        assert code == 2
        assert "v" in err


class TestSweep:
    def test_fk_away_grid(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--models", "fk", "--directions", "away",
            "--v", "0", "1/4", "1/2", "--d", "1",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 6
        worst = {r["v"]: F(r["cr_exact"]) for r in rows if r["side"] == "-1"}
        assert worst == {"0": F(3), "0.25": F(11, 3), "0.5": F(5)}

    def test_cr_round_trips_exactly(self, capsys):
        code, out, _ = run(
            capsys, "sweep", "--models", "nd", "--directions", "away",
            "--v", "1/4", "--d", "1", "10",
        )
        assert code == 0
        for row in parse_csv(out):
            capture = F(row["capture_time_exact"])
            d, v = F(row["d"]), F(row["v"])
            assert F(row["cr_exact"]) == capture / (d / (1 - v))

    def test_scale_invariance_across_d(self, capsys):
        _, out, _ = run(
            capsys, "sweep", "--models", "nd", "--directions", "away",
            "--v", "1/3", "--d", "1", "10",
        )
        crs = {row["cr_exact"] for row in parse_csv(out)}
        assert crs == {"25/1"}

    def test_empty_grid_writes_header_only(self, capsys):
        code, out, _ = run(capsys, "sweep", "--v", "--d")
        assert code == 0
        assert out.strip().startswith("model,direction,alg,")
        assert len(out.strip().splitlines()) == 1

    def test_unwritable_output_is_an_io_error(self, capsys):
        code, _, err = run(
            capsys, "sweep", "--v", "0", "--d", "1",
            "--out", "/nonexistent/dir/out.csv",
        )
        assert code == 3
        assert "cannot write" in err

    def test_writes_to_file(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(
            capsys, "sweep", "--models", "fk", "--directions", "away",
            "--v", "1/2", "--d", "1", "--out", str(out_path),
        )
        assert code == 0
        rows = parse_csv(out_path.read_text())
        assert len(rows) == 2


class TestVerify:
    @pytest.mark.parametrize("suite", ["fk", "nd", "theory", "isolation"])
    def test_passing_suites_exit_zero(self, capsys, suite):
        code, out, _ = run(capsys, "verify", "--suite", suite)
        assert code == 0
        assert "PASS" in out
        assert "FAIL" not in out

    def test_reports_one_line_per_criterion(self, capsys):
        _, out, _ = run(capsys, "verify", "--suite", "nd")
        lines = [l for l in out.splitlines() if l.startswith("criterion")]
        assert len(lines) == 3


class TestTrace:
    def test_fk_away_samples_and_events(self, capsys):
        code, out, _ = run(
            capsys, "trace", "--model", "fk", "--direction", "away",
            "--d", "1", "--v", "1/2", "--side", "-1", "--samples", "5",
        )
        assert code == 0
        rows = parse_csv(out)
        assert len(rows) == 7  # 5 samples + found + capture (no fetch for FK)
        assert rows[-1]["phase"] == "capture"

    def test_wait_holds_the_origin(self, capsys):
        _, out, _ = run(
            capsys, "trace", "--model", "nd", "--direction", "toward",
            "--v", "2", "--d", "1", "--samples", "4",
        )
        for row in parse_csv(out):
            assert row["x_r1"] == "0"
            assert row["x_r2"] == "0"

    def test_zigzag_robots_are_mirrored_before_found(self, capsys):
        _, out, _ = run(
            capsys, "trace", "--model", "nd", "--direction", "away",
            "--alg", "nd-away-zigzag", "--v", "1/4", "--d", "3", "--samples", "12",
        )
        for row in parse_csv(out):
            if row["phase"] in ("search", "found"):
                assert float(row["x_r2"]) == -float(row["x_r1"])
            if row["phase"] == "rendezvous":
                assert row["x_r1"] == row["x_r2"]
