"""Tests for the command-line front end, run in-process through main(argv)."""

import json
import math

import pytest

from src.app import main
from src.cli.output import format_number, json_safe


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOutput:
    def test_seventeen_digits_round_trip(self):
        value = math.sqrt(math.pi)
        assert float(format_number(value)) == value
        assert format_number(0.5) == "0.5"

    def test_non_finite(self):
        assert format_number(math.inf) == "inf"
        assert json_safe({"a": [math.nan, 1.0]}) == {"a": [None, 1.0]}


class TestEval:
    def test_origin(self, capsys):
        code, out, _ = run(capsys, "eval", "--m", "0", "--x", "0")
        assert code == 0
        assert float(out) == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_coulomb(self, capsys):
        code, out, _ = run(capsys, "eval", "--m", "-1", "--x", "2")
        assert code == 0
        assert out.strip() == "0.5"

    def test_m0_at_one(self, capsys):
        _, out, _ = run(capsys, "eval", "--m", "0", "--x", "1")
        assert float(out) == pytest.approx(0.75787216, rel=1e-8)

    def test_negative_x_uses_evenness(self, capsys):
        _, out, _ = run(capsys, "eval", "--m", "1", "--x", "-2")
        _, expected, _ = run(capsys, "eval", "--m", "1", "--x", "2")
        assert out == expected

    def test_domain_error(self, capsys):
        code, out, err = run(capsys, "eval", "--m", "-1", "--x", "0")
        assert code == 2
        assert out == ""
        assert "error" in err

    def test_missing_argument_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "eval", "--m", "0")
        assert code == 1

    def test_unknown_method(self, capsys):
        code, _, _ = run(capsys, "eval", "--m", "0", "--x", "1", "--method", "magic")
        assert code == 1

    def test_explicit_method(self, capsys):
        code, out, _ = run(capsys, "eval", "--m", "2", "--x", "0.5", "--method", "polynomial")
        _, reference, _ = run(capsys, "eval", "--m", "2", "--x", "0.5", "--method", "quadrature")
        assert code == 0
        assert float(out) == pytest.approx(float(reference), rel=1e-10)

    def test_tiny_x(self, capsys):
        code, out, _ = run(capsys, "eval", "--m", "1", "--x", "1e-170")
        assert code == 0
        assert float(out) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-10)

    def test_deterministic(self, capsys):
        first = run(capsys, "eval", "--m", "2.5", "--x", "3")
        second = run(capsys, "eval", "--m", "2.5", "--x", "3")
        assert first == second


class TestTable:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--m-list", "0,1,2", "--x-min", "0", "--x-max", "2", "--points", "5")
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "x,V_0,V_1,V_2"
        assert len(lines) == 6
        first = [float(v) for v in lines[1].split(",")]
        assert first[0] == 0.0
        assert first[1] == pytest.approx(math.sqrt(math.pi), rel=1e-15)

    def test_json_log_grid(self, capsys):
        code, out, _ = run(
            capsys, "table", "--m-list", "0.5", "--x-min", "0.01", "--x-max", "100",
            "--points", "3", "--log", "--format", "json",
        )
        data = json.loads(out)
        assert code == 0
        assert data["columns"] == ["x", "V_0.5"]
        assert [row[0] for row in data["rows"]] == pytest.approx([0.01, 1.0, 100.0])

    def test_single_point(self, capsys):
        code, out, _ = run(capsys, "table", "--m-list", "1", "--x-min", "1", "--x-max", "1", "--points", "1")
        assert code == 0
        assert len(out.strip().splitlines()) == 2

    @pytest.mark.parametrize(
        "extra",
        [
            ["--x-min", "0", "--x-max", "1", "--log"],
            ["--x-min", "2", "--x-max", "1"],
            ["--x-min", "0", "--x-max", "1", "--points", "0"],
        ],
    )
    def test_bad_flags(self, capsys, extra):
        code, _, _ = run(capsys, "table", "--m-list", "0", *extra)
        assert code == 1

    def test_bad_m_list(self, capsys):
        code, _, _ = run(capsys, "table", "--m-list", "a,b", "--x-min", "0", "--x-max", "1")
        assert code == 1


class TestWrappers:
    def test_pair(self, capsys):
        code, out, _ = run(capsys, "pair", "--m1", "0", "--m2", "1", "--antisymmetrize")
        assert code == 0
        assert out == "k=1,w=1\n"

    def test_pair_fractions_and_decimals(self, capsys):
        _, out, _ = run(capsys, "pair", "--m1", "0", "--m2", "1")
        assert out == "k=0,w=1/2\nk=1,w=1/2\n"
        _, out, _ = run(capsys, "pair", "--m1", "0", "--m2", "1", "--decimal")
        assert out == "k=0,w=0.5\nk=1,w=0.5\n"

    def test_pair_identical_states(self, capsys):
        code, _, err = run(capsys, "pair", "--m1", "2", "--m2", "2", "--antisymmetrize")
        assert code == 2
        assert "vanishes" in err

    def test_avg_at_origin(self, capsys):
        code, out, _ = run(capsys, "avg", "--N", "4", "--x", "0")
        expected = sum(math.gamma(m + 0.5) / math.gamma(m + 1) for m in range(4)) / 4
        assert code == 0
        assert float(out) == pytest.approx(expected, rel=1e-14)

    def test_fourier(self, capsys):
        code, out, _ = run(capsys, "fourier", "--m", "0", "--xi", "2")
        assert code == 0
        assert float(out) == pytest.approx(0.2379082, rel=1e-6)

    def test_fourier_at_origin(self, capsys):
        code, _, _ = run(capsys, "fourier", "--m", "0", "--xi", "0")
        assert code == 2

    def test_delta(self, capsys):
        code, out, _ = run(capsys, "delta", "--m", "0", "--beta", "100", "--phi", "gaussian")
        assert code == 0
        assert abs(float(out) - 1.0) < 0.35


class TestSpectrum:
    def test_zero_model_one_electron(self, capsys):
        code, out, _ = run(
            capsys, "spectrum", "--model", "zero", "--N", "1", "--Z", "1", "--B", "1",
            "--grid-points", "401", "--half-width", "20", "--format", "json",
        )
        data = json.loads(out)
        assert code == 0
        assert data["e_h"] < 0
        assert data["E0_conf"] == pytest.approx(data["e_h"] + 1.0)
        assert data["residual"] <= 1e-8
        assert data["grid_points"] == 401

    def test_text_format(self, capsys):
        code, out, _ = run(
            capsys, "spectrum", "--model", "slater", "--N", "1", "--Z", "2", "--B", "4",
            "--grid-points", "201", "--half-width", "10",
        )
        assert code == 0
        keys = [line.split("=", 1)[0] for line in out.splitlines()]
        assert {"e_h", "E0_conf", "residual", "iterations", "boundary_sensitivity"} <= set(keys)

    def test_three_electrons_refused(self, capsys):
        code, _, _ = run(capsys, "spectrum", "--model", "zero", "--N", "3", "--Z", "1", "--B", "1")
        assert code == 1

    def test_even_grid_is_domain_error(self, capsys):
        code, _, _ = run(
            capsys, "spectrum", "--model", "zero", "--N", "1", "--Z", "1", "--B", "1", "--grid-points", "400",
        )
        assert code == 2


class TestVerify:
    def test_bounds_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bounds", "--quick", "--report", "json")
        data = json.loads(out)
        assert code == 0
        assert data["suite"] == "bounds"
        assert set(data) == {"suite", "checks", "exploratory", "version"}
        assert all(check["pass"] for check in data["checks"])

    def test_fault_injection_fails(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "bounds", "--quick", "--perturb-upper", "-0.001")
        assert code == 4
        assert "FAIL a:bracket" in out

    def test_text_report_shows_exploratory_values(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "convexity", "--quick")
        info = [line for line in out.splitlines() if line.startswith("INFO convexity-in-m:")]
        assert code == 0
        assert len(info) == 1
        assert "m=1=" in info[0] and "x=0.1" in info[0]

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "everything")
        assert code == 1


class TestSettingsFile:
    def test_unknown_key(self, capsys, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"colour": "blue"}))
        code, _, err = run(capsys, "--config", str(path), "eval", "--m", "0", "--x", "1")
        assert code == 1
        assert "colour" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, "--config", str(tmp_path / "absent.json"), "eval", "--m", "0", "--x", "1")
        assert code == 1

    def test_file_values_apply(self, capsys, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"rel_tol": 1e-10, "half_width": 15.0, "grid_points": 301}))
        code, out, _ = run(
            capsys, "--config", str(path), "spectrum", "--model", "zero", "--N", "1", "--Z", "1", "--B", "1",
            "--format", "json",
        )
        data = json.loads(out)
        assert code == 0
        assert data["half_width"] == 15.0
        assert data["grid_points"] == 301

    def test_invalid_tolerance_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"rel_tol": -1}))
        code, out, err = run(capsys, "--config", str(path), "eval", "--m", "1", "--x", "1")
        assert code == 1
        assert out == ""
        assert "rel_tol" in err

    def test_zero_abs_tol_with_tight_flag(self, capsys, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"abs_tol": 0.0}))
        code, out, err = run(
            capsys, "--config", str(path), "eval", "--m", "1", "--x", "1",
            "--method", "quadrature", "--tol", "1e-15",
        )
        # V_1(1) = 1 - V_0(1) / 2
        expected = 1.0 - 0.5 * math.sqrt(math.pi) * math.exp(1.0) * math.erfc(1.0)
        assert code in (0, 3)
        assert "Traceback" not in err
        if code == 0:
            assert float(out) == pytest.approx(expected, rel=1e-8)
