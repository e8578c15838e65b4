"""CLI thin client: flags, config file, file outputs, determinism."""

import pytest

from matchwalk.cli import main, parse_config_file


class TestSpectrumCommand:
    def test_writes_csv(self, tmp_path):
        out = tmp_path / "spec.csv"
        assert main(["spectrum", "--n", "4", "--t", "1", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "# graph n=4 t=1 matching=0-1"
        assert lines[1] == "source,eigenvalue,multiplicity"
        assert any(line.startswith("closed_form,") for line in lines)
        assert any(line.startswith("numeric,") for line in lines)

    def test_stdout_default(self, capsys):
        assert main(["spectrum", "--n", "3", "--t", "0"]) == 0
        captured = capsys.readouterr()
        assert "source,eigenvalue,multiplicity" in captured.out


class TestSearchCommand:
    def test_trace_csv(self, tmp_path):
        out = tmp_path / "search.csv"
        assert main(["search", "--n", "8", "--t", "1", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "n,t,k,FP_k"
        assert lines[2].startswith("8,1,0,")
        assert lines[-1].startswith("# summary theta_m=")

    def test_steps_flag(self, tmp_path):
        out = tmp_path / "search.csv"
        main(["search", "--n", "8", "--t", "1", "--steps", "2", "--out", str(out)])
        data_lines = [
            l for l in out.read_text().splitlines() if l and not l.startswith(("#", "n,"))
        ]
        assert len(data_lines) == 3  # k = 0, 1, 2


class TestClassicalCommand:
    def test_row(self, tmp_path):
        out = tmp_path / "classical.csv"
        assert main(["classical", "--n", "4", "--t", "1", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[1] == "n,t,mu_plus,mu_m,est_hitting,exact_hitting"
        assert lines[2].startswith("4,1,")
        assert "NA" not in lines[2]

    def test_no_exact(self, tmp_path):
        out = tmp_path / "classical.csv"
        main(["classical", "--n", "4", "--t", "1", "--no-exact", "--out", str(out)])
        assert out.read_text().splitlines()[2].endswith(",NA")


class TestSweepFitReport:
    def test_sweep_deterministic(self, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "--n", "8,11,16", "--seed", "5"]
        assert main(args + ["--out", str(out1)]) == 0
        assert main(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_modes_flag(self, tmp_path):
        out = tmp_path / "c.csv"
        main(["sweep", "--n", "8,11", "--modes", "classical", "--out", str(out)])
        header_line = [
            l for l in out.read_text().splitlines() if l.startswith("# alpha")
        ][0]
        assert "modes=classical" in header_line

    def test_fit_and_report(self, tmp_path, capsys):
        data = tmp_path / "sweep.csv"
        main(["sweep", "--n", "8,11,16,23,32,45", "--out", str(data)])
        assert main(["fit", str(data), "--column", "k_total"]) == 0
        fit_line = capsys.readouterr().out
        assert "column=k_total slope=" in fit_line
        prefix = tmp_path / "curves"
        assert main(["report", str(data), "--out", str(prefix)]) == 0
        table = capsys.readouterr().out
        assert "k_total" in table and "speedup" in table
        for name in ("quantum", "classical", "speedup"):
            assert (tmp_path / f"curves.{name}.csv").exists()


class TestConfigFile:
    def test_parse(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("n = 8,11\nalpha = 0.5\nseed = 9  # comment\n\n# note\n")
        values = parse_config_file(str(cfg))
        assert values == {"n": "8,11", "alpha": 0.5, "seed": 9}

    def test_unknown_key(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("qubits = 3\n")
        with pytest.raises(SystemExit):
            parse_config_file(str(cfg))

    def test_config_supplies_defaults_and_flags_win(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        out_cfg = tmp_path / "from_config.csv"
        cfg.write_text(f"n = 6\nt = 2\nout = {out_cfg}\n")
        assert main(["--config", str(cfg), "spectrum"]) == 0
        assert "# graph n=6 t=2" in out_cfg.read_text()

        out_flag = tmp_path / "from_flag.csv"
        assert main(
            ["--config", str(cfg), "spectrum", "--n", "4", "--t", "1", "--out", str(out_flag)]
        ) == 0
        assert "# graph n=4 t=1" in out_flag.read_text()
