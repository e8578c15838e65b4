"""Sweep harness: grids, determinism, fits, comparison report."""

import numpy as np
import pytest

from matchwalk import (
    DegenerateFit,
    InfeasibleGrid,
    MissingMode,
    SweepConfig,
    compare_report,
    fit_exponent,
    gram_spectrum_closed_form,
    matching_size,
    parse_sweep_csv,
    run_sweep,
)

SMALL_GRID = (8, 11, 16, 23)


def small_config(**overrides):
    base = dict(n_grid=SMALL_GRID, alpha=0.0, c=1.0, seed=7)
    base.update(overrides)
    return SweepConfig(**base)


class TestConfig:
    def test_matching_size(self):
        assert matching_size(32, 0.0, 1.0) == 1
        assert matching_size(32, 1.0, 0.25) == 8
        assert matching_size(45, 0.5, 1.0) == 7

    def test_infeasible(self):
        with pytest.raises(InfeasibleGrid):
            matching_size(8, 1.0, 1.0)  # t = 8 > floor(9/2)
        with pytest.raises(InfeasibleGrid):
            SweepConfig(n_grid=(8, 16), alpha=1.0, c=1.0)
        with pytest.raises(InfeasibleGrid):
            SweepConfig(n_grid=(1,), alpha=0.0, c=1.0)
        with pytest.raises(InfeasibleGrid):
            SweepConfig(c=0.0)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            SweepConfig(modes={"quantum", "annealing"})


class TestRunSweep:
    def test_rows_and_consistency(self):
        result = run_sweep(small_config())
        assert len(result.rows) == len(SMALL_GRID)
        for row in result.rows:
            assert row["t"] == 1
            # internal consistency of the emitted quantities
            assert row["k_total"] == pytest.approx(
                row["k_f"] * np.sqrt(1.0 / row["FP_n"]), rel=1e-9
            )
            mu_plus, _, _ = gram_spectrum_closed_form(row["n"], row["t"])
            assert row["mu_m"] == pytest.approx(
                (mu_plus - 2) / (2 * (row["n"] - 1)), abs=1e-12
            )
            assert row["exact_hitting"] is not None  # all small cells

    def test_deterministic_bytes(self):
        first = run_sweep(small_config()).csv
        second = run_sweep(small_config()).csv
        assert first == second
        different_seed = run_sweep(small_config(seed=8)).csv
        # same observables, different matching provenance lines
        assert different_seed != first
        assert parse_sweep_csv(different_seed) == parse_sweep_csv(first)

    def test_workers_do_not_change_output(self):
        serial = run_sweep(small_config(workers=1)).csv
        parallel = run_sweep(small_config(workers=3)).csv
        assert serial == parallel

    def test_empty_modes_header_only(self):
        result = run_sweep(small_config(modes=frozenset()))
        assert result.rows == ()
        lines = [l for l in result.csv.splitlines() if not l.startswith("#")]
        assert lines == [
            "n,alpha,c,t,theta_m,k_f,FP_n,k_total,mu_m,est_hitting,exact_hitting"
        ]

    def test_single_mode_leaves_na(self):
        result = run_sweep(small_config(modes=frozenset({"classical"})))
        for row in result.rows:
            assert row["k_total"] is None
            assert row["est_hitting"] is not None
        assert ",NA," in result.csv

    def test_spectra_mode_runs(self):
        result = run_sweep(small_config(modes=frozenset({"quantum", "spectra"})))
        assert len(result.rows) == len(SMALL_GRID)

    def test_exact_limit_cutoff(self):
        result = run_sweep(small_config(n_grid=(8, 16), exact_limit=10))
        by_n = {row["n"]: row for row in result.rows}
        assert by_n[8]["exact_hitting"] is not None
        assert by_n[16]["exact_hitting"] is None

    def test_out_file(self, tmp_path):
        path = tmp_path / "sweep.csv"
        result = run_sweep(small_config(out=str(path)))
        assert path.read_text() == result.csv

    def test_csv_roundtrip(self):
        result = run_sweep(small_config())
        parsed = parse_sweep_csv(result.csv)
        assert len(parsed) == len(result.rows)
        for parsed_row, row in zip(parsed, result.rows):
            for key, value in row.items():
                if value is None:
                    assert parsed_row[key] is None
                elif isinstance(value, int):
                    assert parsed_row[key] == value
                else:
                    assert parsed_row[key] == pytest.approx(value, rel=1e-10)

    def test_provenance_header(self):
        result = run_sweep(small_config())
        lines = result.csv.splitlines()
        assert lines[0] == "# matchwalk sweep"
        assert any(line.startswith("# graph n=8 t=1 matching=") for line in lines)


class TestFit:
    def test_exact_square_law(self):
        rows = [{"n": n, "y": float(n) ** 2} for n in (8, 16, 32, 64, 128, 256)]
        fit = fit_exponent(rows, "y")
        assert fit.slope == pytest.approx(2.0, abs=1e-12)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)

    def test_prefactor_and_intercept(self):
        rows = [{"n": n, "y": 7.0 * n**0.5} for n in (8, 16, 32, 64, 128, 256)]
        fit = fit_exponent(rows, "y", drop_smallest=0)
        assert fit.slope == pytest.approx(0.5, abs=1e-12)
        assert fit.intercept == pytest.approx(np.log(7.0), abs=1e-12)
        assert max(abs(r) for r in fit.residuals) <= 1e-12

    def test_too_few_points(self):
        rows = [{"n": n, "y": float(n)} for n in (8, 16, 32, 64, 128)]
        with pytest.raises(DegenerateFit):
            fit_exponent(rows, "y", drop_smallest=2)  # only 3 remain

    def test_non_positive_values(self):
        rows = [{"n": n, "y": 0.0} for n in (8, 16, 32, 64)]
        with pytest.raises(DegenerateFit):
            fit_exponent(rows, "y", drop_smallest=0)

    def test_missing_column(self):
        rows = [{"n": n} for n in (8, 16, 32, 64)]
        with pytest.raises(DegenerateFit):
            fit_exponent(rows, "y", drop_smallest=0)

    def test_classical_estimate_slope(self):
        config = SweepConfig(
            n_grid=(16, 23, 32, 45, 64, 91, 128), modes=frozenset({"classical"}),
            exact_limit=0,
        )
        rows = [dict(r) for r in run_sweep(config).rows]
        fit = fit_exponent(rows, "est_hitting")
        assert abs(fit.slope - 2.0) <= 0.1


class TestReport:
    def test_table_and_curves(self):
        rows = [dict(r) for r in run_sweep(small_config()).rows]
        report = compare_report(rows)
        assert report.table.count("\n") == len(rows) + 2  # header + rule + rows
        assert set(report.curves) == {"quantum", "classical", "speedup"}
        speedup = dict(report.curves["speedup"])
        for row in rows:
            assert speedup[row["n"]] == pytest.approx(
                row["est_hitting"] / row["k_total"], rel=1e-12
            )

    def test_single_row_no_fit(self):
        rows = [dict(r) for r in run_sweep(small_config(n_grid=(8,))).rows]
        report = compare_report(rows)
        assert report.ratio_fit is None
        assert report.table.count("\n") == 3

    def test_ratio_fit_on_long_grid(self):
        config = SweepConfig(
            n_grid=(16, 23, 32, 45, 64, 91), exact_limit=0
        )
        rows = [dict(r) for r in run_sweep(config).rows]
        report = compare_report(rows)
        assert report.ratio_fit is not None
        # quadratic speed-up: est_hitting/k_total ~ n^{(2-alpha)/2} = n^1
        assert abs(report.ratio_fit.slope - 1.0) <= 0.15

    def test_missing_mode(self):
        rows = [dict(r) for r in run_sweep(small_config(modes=frozenset({"quantum"}))).rows]
        with pytest.raises(MissingMode):
            compare_report(rows)
