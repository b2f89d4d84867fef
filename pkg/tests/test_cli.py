import csv

import numpy as np
import pytest

from cosmic_entanglement import cli, runner
from cosmic_entanglement.config import load_scenario, read_config
from cosmic_entanglement.errors import ConfigError
from cosmic_entanglement.kossakowski import KossakowskiCoefficients

BASE = """\
# isotropic pair near a nu = 2 string
[geometry]
nu = 2
omega_r = 0.5
omega_L = 0.5
[dipoles]
d1 = 1, 1, 1
d2 = 1, 1, 1
[evolution]
t_max = 2
dt = 0.05
"""


def _write(tmp_path, text, name="scenario.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def _columns(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array(rows[1:], dtype=float)


def test_read_config(tmp_path):
    values = read_config(_write(tmp_path, BASE + "Werner_P = 0.9  # trailing\n"))
    assert values["nu"] == "2" and values["werner_p"] == "0.9"


@pytest.mark.parametrize("extra", ["bogus = 1\n", "nu = 3\n", "[nowhere]\n", "just text\n"])
def test_read_config_rejects(tmp_path, extra):
    with pytest.raises(ConfigError):
        read_config(_write(tmp_path, BASE + extra))


def test_scenario_normalises_dipoles(tmp_path, caplog):
    scenario = load_scenario(_write(tmp_path, BASE))
    assert np.allclose(scenario.dipoles.d1, np.ones(3) / np.sqrt(3))
    assert "normalising" in caplog.text


@pytest.mark.parametrize("override", [{"nu": "0.5"}, {"werner_p": "1.5"}, {"d1": "1, 0"},
                                      {"method": "rk4", "dt": "0.05"}, {"sweep_param": "nu"},
                                      {"sweep_param": "nu", "sweep_values": "2, 0.5"},
                                      {"omega_r": "abc"}])
def test_scenario_validation(tmp_path, override):
    with pytest.raises(ConfigError):
        load_scenario(_write(tmp_path, BASE), override)


def test_evolve_is_deterministic(tmp_path):
    cfg = _write(tmp_path, BASE)
    outs = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for out in outs:
        assert cli.main(["evolve", "--config", cfg, "--out", str(out)]) == 0
    assert outs[0].read_bytes() == outs[1].read_bytes()
    header, data = _columns(outs[0])
    assert tuple(header) == runner.TRAJECTORY_COLUMNS
    assert data.shape == (41, 7)
    assert np.all((data[:, -1] >= 0) & (data[:, -1] <= 1))
    assert b"\r\n" not in outs[0].read_bytes()


def test_flag_overrides_config(tmp_path):
    cfg = _write(tmp_path, BASE)
    out = tmp_path / "o.csv"
    assert cli.main(["evolve", "--config", cfg, "--out", str(out), "--t_max", "1"]) == 0
    assert _columns(out)[1][-1, 0] == pytest.approx(1.0)


def test_coefficients_stdout(tmp_path, capsys):
    assert cli.main(["coefficients", "--config", _write(tmp_path, BASE)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split(",") == list(runner.COEFFICIENT_COLUMNS)
    row = [float(v) for v in lines[1].split(",")]
    assert row[:3] == [2.0, 0.5, 0.5]


def test_sweep_matches_single_runs(tmp_path):
    cfg = _write(tmp_path, BASE + "[sweep]\nsweep_param = omega_L\nsweep_values = 0.5, 1.5\n")
    outdir = tmp_path / "sweep"
    assert cli.main(["sweep", "--config", cfg, "--outdir", str(outdir), "--jobs", "2"]) == 0
    for i, L in enumerate(("0.5", "1.5")):
        single = tmp_path / f"single{i}.csv"
        assert cli.main(["evolve", "--config", _write(tmp_path, BASE), "--omega_L", L,
                         "--out", str(single)]) == 0
        swept = outdir / f"evolve_{i:03d}_omega_L_{L}.csv"
        assert swept.read_bytes() == single.read_bytes()
    _, table = _columns(outdir / "coefficients.csv")
    assert table[:, 2].tolist() == [0.5, 1.5]


def test_evolve_sweep_writes_one_file_per_point(tmp_path):
    cfg = _write(tmp_path, BASE + "sweep_param = nu\nsweep_values = 2, 3\n")
    assert cli.main(["evolve", "--config", cfg, "--out", str(tmp_path / "run.csv")]) == 0
    single = tmp_path / "single.csv"
    assert cli.main(["evolve", "--config", _write(tmp_path, BASE), "--nu", "3",
                     "--out", str(single)]) == 0
    assert (tmp_path / "run_000_nu_2.csv").exists()
    assert (tmp_path / "run_001_nu_3.csv").read_bytes() == single.read_bytes()


def test_fixed_point_ten_significant_digits(tmp_path):
    out = tmp_path / "o.csv"
    assert cli.main(["evolve", "--config", _write(tmp_path, BASE), "--out", str(out)]) == 0
    first = out.read_text().splitlines()[1].split(",")
    assert first[0] == "0.000000000"
    assert first[1] == "0.6666666667"
    assert first[-1] == "0.5000000000"
    assert "e" not in out.read_text().lower().replace("gamma_tau", "").replace("concurrence", "")


def test_freezing_concurrence_column(tmp_path):
    cfg = _write(tmp_path, BASE.replace("omega_r = 0.5", "omega_r = 0")
                 .replace("d1 = 1, 1, 1", "d1 = 1, 0, 0").replace("d2 = 1, 1, 1", "d2 = 0, 1, 0")
                 .replace("t_max = 2", "t_max = 50"))
    out = tmp_path / "frozen.csv"
    assert cli.main(["evolve", "--config", cfg, "--out", str(out)]) == 0
    conc = _columns(out)[1][:, -1]
    assert np.max(np.abs(conc - 0.5)) <= 1e-9


@pytest.mark.parametrize("argv", [
    ["evolve", "--nu", "2", "--omega_r", "0.5", "--omega_L", "0.5", "--t_max", "0"],
    ["evolve", "--nu", "2", "--omega_r", "0.5"],
    ["coefficients", "--nu", "2", "--omega_r", "0.5", "--omega_L", "0.5", "--quad-tol", "0.1"],
])
def test_config_errors_exit_2(tmp_path, argv):
    assert cli.main(argv + ["--out", str(tmp_path / "x.csv")]) == 2


def test_config_error_reports_file(tmp_path, capsys):
    assert cli.main(["coefficients", "--config", _write(tmp_path, BASE + "bogus = 1\n")]) == 2
    assert "bogus" in capsys.readouterr().err


def test_convergence_error_exit_3(capsys):
    argv = ["coefficients", "--nu", "1", "--omega_r", "20", "--omega_L", "0.5", "--n_max", "5"]
    assert cli.main(argv) == 3
    assert "omega_r=20" in capsys.readouterr().err


def test_physicality_error_exit_4(tmp_path, monkeypatch):
    monkeypatch.setattr(runner, "coefficients_from_response",
                        lambda res, dipoles: KossakowskiCoefficients(0.1, 0.1, 0.3))
    argv = ["evolve", "--config", _write(tmp_path, BASE), "--out", str(tmp_path / "x.csv")]
    assert cli.main(argv) == 4


@pytest.mark.parametrize("fig,n_curves", [("2a", 4), ("3b", 5), ("5", 4)])
def test_figures(tmp_path, fig, n_curves):
    outdir = tmp_path / fig
    assert cli.main(["figures", "--id", fig, "--outdir", str(outdir), "--t_max", "3",
                     "--dt", "0.05", "--jobs", "1"]) == 0
    index = (outdir / f"fig{fig}_index.csv").read_text().splitlines()
    assert len(index) == n_curves + 1
    for line in index[1:]:
        label = line.split(",")[0]
        header, data = _columns(outdir / f"fig{fig}_{label}.csv")
        assert data.shape == (61, 7)
        assert np.all((data[:, -1] >= 0) & (data[:, -1] <= 1))
    if fig == "3b":
        _, frozen = _columns(outdir / "fig3b_omegar0.csv")
        assert np.max(np.abs(frozen[:, -1] - 0.5)) <= 1e-9


def test_unknown_figure_rejected(tmp_path):
    with pytest.raises(SystemExit):
        cli.main(["figures", "--id", "9", "--outdir", str(tmp_path)])
