import json

import pytest
from typer.testing import CliRunner

from dirac1d.cli import app
from dirac1d.cli.cli import EXIT_CONFIG_ERROR, EXIT_NUMERIC_ERROR
from dirac1d.visualization import read_csv, read_ppm

runner = CliRunner()

SMALL = ["--n", "1024", "--l", "64", "--t-max", "10", "--frames", "11"]
SMALL_RASTER = ["--set", "raster.width=32", "--set", "raster.height=16"]


class TestValidate:
    def test_bundled_config(self):
        result = runner.invoke(app, ["validate", "gauss11.conf"])
        assert result.exit_code == 0, result.output
        assert "Configuration Valid" in result.stdout

    def test_kind_shorthand(self):
        result = runner.invoke(app, ["validate", "gauss11.conf", "--kind", "gauss11_boosted"])
        assert result.exit_code == 0, result.output
        assert "gauss11_boosted" in result.stdout

    def test_missing_file(self):
        result = runner.invoke(app, ["validate", "no_such_run.conf"])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("grid.n = 1024\ngrid.bogus = 1\n")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_unresolved_grid_is_numeric(self):
        result = runner.invoke(app, ["validate", "gauss11.conf", "--set", "grid.n=16"])
        assert result.exit_code == EXIT_NUMERIC_ERROR


class TestSimulate:
    def test_writes_run_directory(self, tmp_path):
        result = runner.invoke(
            app,
            ["simulate", "gauss11.conf", *SMALL, *SMALL_RASTER],
            env={"DIRAC1D_OUT": str(tmp_path)},
        )
        assert result.exit_code == 0, result.output
        run_dir = tmp_path / "gauss11-gauss11"
        manifest = json.loads((run_dir / "manifest.json").read_text())
        assert manifest["config"]["time"]["frames"] == 11
        _, rows = read_csv(run_dir / "observables.csv")
        assert rows.shape[0] == 11
        assert read_ppm(run_dir / "spacetime.ppm").shape == (16, 32, 3)

    def test_out_option_wins(self, tmp_path):
        result = runner.invoke(
            app,
            ["simulate", "gauss10.conf", *SMALL, *SMALL_RASTER, "-o", str(tmp_path / "a")],
            env={"DIRAC1D_OUT": str(tmp_path / "b")},
        )
        assert result.exit_code == 0, result.output
        assert (tmp_path / "a" / "gauss10-gauss10" / "manifest.json").is_file()
        assert not (tmp_path / "b").exists()

    def test_wrap_around_is_config_error(self, tmp_path):
        result = runner.invoke(
            app, ["simulate", "gauss11.conf", "--t-max", "1e9", "-o", str(tmp_path)]
        )
        assert result.exit_code == EXIT_CONFIG_ERROR
        assert not any(tmp_path.iterdir())


def test_decompose(tmp_path):
    result = runner.invoke(
        app, ["decompose", "gauss11_boosted.conf", "-o", str(tmp_path)]
    )
    assert result.exit_code == 0, result.output
    header, rows = read_csv(tmp_path / "gauss11_boosted-gauss11_boosted" / "momentum.csv")
    assert header == ("p", "rho_pos", "rho_neg")
    assert rows.shape == (2048, 3)


def test_spacetime(tmp_path):
    result = runner.invoke(
        app, ["spacetime", "posneg_pair.conf", "--t-max", "10", "--frames", "11",
              *SMALL_RASTER, "-o", str(tmp_path)]
    )
    assert result.exit_code == 0, result.output
    pixels = read_ppm(tmp_path / "posneg_pair-posneg_pair" / "spacetime.ppm")
    assert pixels.shape == (16, 32, 3)


class TestPeaks:
    args = ["peaks", "posneg_pair.conf", "--t-max", "2", "--frames", "21"]

    def test_contrast_fringes(self):
        result = runner.invoke(app, [*self.args, "--window=-4:5", "--contrast"])
        assert result.exit_code == 0, result.output
        assert "Peak speed" in result.stdout
        assert "faster than light" in result.stdout

    @pytest.mark.parametrize("window", ["5:1", "a:b", "3"])
    def test_bad_window(self, window):
        result = runner.invoke(app, [*self.args, f"--window={window}"])
        assert result.exit_code == EXIT_CONFIG_ERROR

    def test_too_few_frames_is_numeric(self):
        result = runner.invoke(app, ["peaks", "posneg_pair.conf", "--frames", "2", "--window=-4:5"])
        assert result.exit_code == EXIT_NUMERIC_ERROR
