import importlib
import io
import json

import pandas as pd
import pytest

from src.cli import main
from src.cli.sweeps import format_decimal, write_csv
from src.core.errors import EXIT_DOMAIN, EXIT_IO, EXIT_OK, EXIT_ORACLE, DomainError

cli_module = importlib.import_module("src.cli.main")

SMALL_DELTA = ["sweep-delta", "--n-steps", "5", "--r-steps", "4"]


def _frame(text):
    return pd.read_csv(io.StringIO(text))


class TestSweepDelta:
    def test_byte_identical_reruns(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main([*SMALL_DELTA, "--out", str(first)]) == 0
        assert main([*SMALL_DELTA, "--out", str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()
        assert b"\r\n" not in first.read_bytes()

    def test_header_and_row_order(self, capsys):
        assert main(SMALL_DELTA) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "n_bar,r,delta"
        frame = _frame(out)
        assert len(frame) == 20
        assert (frame["r"].iloc[:5] == 0.99).all()
        assert frame["n_bar"].iloc[0] == 1.0
        assert frame["n_bar"].iloc[4] == 50000.0
        assert frame["r"].is_monotonic_increasing

    def test_zero_photons_give_zero_gain(self, capsys):
        argv = ["sweep-delta", "--n-min", "0", "--n-max", "10", "--n-scale", "linear",
                "--n-steps", "3", "--r-steps", "3"]
        assert main(argv) == 0
        frame = _frame(capsys.readouterr().out)
        assert (frame.loc[frame["n_bar"] == 0.0, "delta"] == 0.0).all()

    def test_log_grid_from_zero_rejected(self):
        assert main(["sweep-delta", "--n-min", "0", "--n-steps", "3", "--r-steps", "3"]) == EXIT_DOMAIN

    def test_precision_out_of_range(self):
        assert main([*SMALL_DELTA, "--precision", "3"]) == EXIT_DOMAIN

    def test_missing_directory(self, tmp_path):
        assert main([*SMALL_DELTA, "--out", str(tmp_path / "missing" / "d.csv")]) == EXIT_IO


class TestDesignCurves:
    def test_condition_curves(self, capsys):
        assert main(["condition-curves", "--K", "1", "--n-steps", "10"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "n_bar,info_classical,info_quantum"
        frame = _frame(out)
        assert frame["n_bar"].iloc[0] == 10.0
        assert (frame["info_quantum"] > frame["info_classical"]).all()

    def test_condition_curves_need_budget_above_gap(self):
        assert main(["condition-curves", "--K", "1", "--n-min", "0.5", "--n-steps", "10"]) == EXIT_DOMAIN

    def test_classical_cap(self, capsys):
        assert main(["classical-cap"]) == 0
        frame = _frame(capsys.readouterr().out)
        assert list(frame.columns) == ["n_bar", "info_classical"]
        assert len(frame) == 200
        assert frame["info_classical"].is_monotonic_increasing
        assert frame["n_bar"].iloc[-1] == 1000.0

    def test_asymptote_curve(self, capsys):
        assert main(["asymptote-curve", "--K-steps", "5"]) == 0
        frame = _frame(capsys.readouterr().out)
        assert list(frame.columns) == ["K", "asymptotic_quantum_info", "c_equivalent"]
        assert frame["asymptotic_quantum_info"].is_monotonic_increasing
        assert frame["c_equivalent"].iloc[0] == pytest.approx(10.0)

    def test_asymptote_precision(self):
        assert main(["asymptote-curve", "--precision", "3"]) == EXIT_DOMAIN


class TestDesign:
    def test_json_report(self, capsys):
        assert main(["design", "--nbar-max", "1000", "--K", "1", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["r"] == pytest.approx(0.999)
        assert report["info_quantum"] > report["info_classical_cap"]

    def test_json_report_keeps_table_on_stderr(self, capsys):
        assert main(["design", "--nbar-max", "1000", "--K", "1", "--json"]) == EXIT_OK
        captured = capsys.readouterr()
        assert json.loads(captured.out)["K"] == 1.0
        assert "info_quantum" in captured.err
        assert "Secure design" in captured.err

    def test_table_report(self, capsys):
        assert main(["design", "--nbar-max", "10", "--K", "1"]) == 0
        assert "info_quantum" in capsys.readouterr().out

    def test_infeasible(self, capsys):
        assert main(["design", "--nbar-max", "10", "--K", "20"]) == EXIT_DOMAIN
        assert "error" in capsys.readouterr().err


class TestOracleCheck:
    def test_desk_scale_guard(self):
        assert main(["oracle-check", "--nbar", "10"]) == EXIT_DOMAIN

    def test_identity_channel_passes(self, capsys):
        assert main(["oracle-check", "--nbar", "1", "--r", "1", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert len(report["checks"]) == 7

    def test_failed_check_exit_code(self, monkeypatch):
        def failing(nbar, r, cutoff=None):
            row = {"name": "epr_fidelity", "oracle": 0.4, "closed_form": 0.5,
                   "tolerance": 1e-8, "passed": False}
            return {"nbar": nbar, "r": r, "cutoff_coherent": 20, "cutoff_epr": 40,
                    "tail_coherent": 0.0, "tail_epr": 0.0, "fidelity_epr_printed": 0.1,
                    "checks": [row], "passed": False}

        monkeypatch.setattr(cli_module, "run_crosscheck", failing)
        assert main(["oracle-check", "--json"]) == EXIT_ORACLE

    def test_insufficient_cutoff(self):
        assert main(["oracle-check", "--nbar", "2", "--r", "0.5", "--cutoff", "5"]) == EXIT_DOMAIN


class TestCsvOutput:
    def test_small_values_in_decimal_notation(self, capsys):
        assert main(["condition-curves", "--K", "1", "--n-steps", "10"]) == 0
        rows = capsys.readouterr().out.splitlines()[1:]
        assert rows
        assert not any("e" in row.lower() for row in rows)

    @pytest.mark.parametrize("value, precision, text", [
        (1.8033688011112042e-07, 6, "0.000000180337"),
        (1000.0, 12, "1000"),
        (0.99, 12, "0.99"),
        (0.0, 6, "0"),
    ])
    def test_format_decimal(self, value, precision, text):
        assert format_decimal(value, precision) == text

    def test_non_finite_values_abort_before_writing(self, tmp_path):
        target = tmp_path / "bad.csv"
        frame = pd.DataFrame({"n_bar": [1.0, 2.0], "delta": [0.1, float("nan")]})
        with pytest.raises(DomainError):
            write_csv(frame, target, 12)
        assert not target.exists()

    def test_non_finite_values_exit_code(self, monkeypatch, tmp_path):
        def broken(K, config):
            return pd.DataFrame({"n_bar": [10.0], "info_classical": [float("inf")], "info_quantum": [0.3]})

        monkeypatch.setattr(cli_module, "condition_curves", broken)
        target = tmp_path / "c.csv"
        assert main(["condition-curves", "--K", "1", "--n-steps", "10", "--out", str(target)]) == EXIT_DOMAIN
        assert not target.exists()
