import logging
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ..config import RunConfig, parse_config
from ..errors import ConfigError, NumericError
from ..models import to_momentum
from ..observables import (
    classical_velocity_mean,
    centroid_speed,
    energy_weights,
    interference_contrast,
    mean_momentum,
    momentum_decomposition,
    track_peaks,
    worldline,
)
from ..simulation import Simulator, default_run_name, run_simulation
from ..visualization import write_momentum_csv, write_spacetime_raster
from ..wavepackets import make_packet

app = typer.Typer(
    name="dirac1d",
    help="Free 1D Dirac equation simulator: Zitterbewegung, energy projections and space-time diagrams",
    rich_markup_mode="rich",
)
console = Console()
err_console = Console(stderr=True)

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_ERROR = 3
DEFAULT_OUT_ROOT = "runs"


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _fail(e: Exception) -> typer.Exit:
    err_console.print(f"[bold red]Error:[/bold red] {e}")
    if isinstance(e, (ConfigError, FileNotFoundError)):
        return typer.Exit(EXIT_CONFIG_ERROR)
    if isinstance(e, NumericError):
        return typer.Exit(EXIT_NUMERIC_ERROR)
    return typer.Exit(EXIT_FAILURE)


def _resolve_config_path(config_file: str) -> Path:
    config_path = Path(config_file)
    if config_path.exists():
        return config_path
    bundled = Path(__file__).parent.parent / "test" / config_file
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"Configuration file not found: {config_file}")


def _overrides(
    assignments: Optional[List[str]],
    kind: Optional[str],
    t_max: Optional[float],
    frames: Optional[int],
    n: Optional[int],
    l: Optional[float],
) -> List[str]:
    overrides = list(assignments or [])
    shorthand = {
        "packet.kind": kind,
        "time.t_max": t_max,
        "time.frames": frames,
        "grid.n": n,
        "grid.l": l,
    }
    overrides.extend(f"{key}={value}" for key, value in shorthand.items() if value is not None)
    return overrides


def _load_config(config_file: str, overrides: List[str]) -> Tuple[Path, RunConfig]:
    config_path = _resolve_config_path(config_file)
    text = config_path.read_text(encoding="utf-8")
    return config_path, parse_config(text, overrides)


def _parse_window(window: str) -> Tuple[float, float]:
    try:
        lo, hi = (float(part) for part in window.split(":"))
    except ValueError:
        raise ConfigError(f"window must be 'LO:HI', got {window!r}") from None
    if not lo < hi:
        raise ConfigError(f"window needs LO < HI, got {window!r}")
    return lo, hi


def _out_dir(out: Optional[Path], config_path: Path, cfg: RunConfig) -> Path:
    root = out if out is not None else Path(DEFAULT_OUT_ROOT)
    return root / default_run_name(config_path, cfg)


_SET_HELP = "Override a config key, e.g. --set grid.n=1024 (repeatable)"


@app.command()
def simulate(
    config_file: str = typer.Argument(..., help="Path to a run configuration file"),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", envvar="DIRAC1D_OUT", help="Output root directory"
    ),
    assignments: Optional[List[str]] = typer.Option(None, "--set", "-s", help=_SET_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help="Packet kind"),
    t_max: Optional[float] = typer.Option(None, "--t-max", help="Final time"),
    frames: Optional[int] = typer.Option(None, "--frames", help="Number of frames"),
    n: Optional[int] = typer.Option(None, "--n", help="Grid points (power of two)"),
    l: Optional[float] = typer.Option(None, "--l", help="Domain half-length"),
    verbose: bool = typer.Option(
        False, "--verbose", "-v", help="Enable debug logging of every frame"
    ),
):
    configure_logging(verbose)
    try:
        config_path, cfg = _load_config(
            config_file, _overrides(assignments, kind, t_max, frames, n, l)
        )
        out_dir = _out_dir(out, config_path, cfg)

        console.print("\n[bold blue]Dirac Simulation Starting[/bold blue]")
        console.print(f"Packet: [green]{cfg.packet.kind}[/green]")
        console.print(f"Grid: [yellow]n={cfg.grid.n}, l={cfg.grid.l:g}[/yellow]")
        console.print(
            f"Time: [yellow]{cfg.time.frames}[/yellow] frames to t = [yellow]{cfg.time.t_max:g}[/yellow]\n"
        )

        manifest = run_simulation(cfg, out_dir, verbose=verbose)
        _display_manifest(manifest)

    except Exception as e:
        raise _fail(e)


@app.command()
def decompose(
    config_file: str = typer.Argument(..., help="Path to a run configuration file"),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", envvar="DIRAC1D_OUT", help="Output root directory"
    ),
    assignments: Optional[List[str]] = typer.Option(None, "--set", "-s", help=_SET_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help="Packet kind"),
):
    """Write the energy-sign momentum densities of the initial packet."""
    configure_logging()
    try:
        config_path, cfg = _load_config(
            config_file, _overrides(assignments, kind, None, None, None, None)
        )
        g0 = to_momentum(make_packet(cfg.grid.build(), cfg.packet))
        out_dir = _out_dir(out, config_path, cfg)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = write_momentum_csv(momentum_decomposition(g0), out_dir / "momentum.csv")

        w_pos, w_neg = energy_weights(g0)
        table = Table(title="Energy-Sign Decomposition")
        table.add_column("Part", style="cyan")
        table.add_column("Weight", style="yellow")
        table.add_row("positive energy", f"{w_pos:.12f}")
        table.add_row("negative energy", f"{w_neg:.12f}")
        console.print(table)
        console.print(f"[bold green]✓ Momentum densities saved to {path}[/bold green]")

    except Exception as e:
        raise _fail(e)


@app.command()
def spacetime(
    config_file: str = typer.Argument(..., help="Path to a run configuration file"),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", envvar="DIRAC1D_OUT", help="Output root directory"
    ),
    assignments: Optional[List[str]] = typer.Option(None, "--set", "-s", help=_SET_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help="Packet kind"),
    t_max: Optional[float] = typer.Option(None, "--t-max", help="Final time"),
    frames: Optional[int] = typer.Option(None, "--frames", help="Number of frames"),
):
    """Write only the space-time density raster with the worldline."""
    configure_logging()
    try:
        config_path, cfg = _load_config(
            config_file, _overrides(assignments, kind, t_max, frames, None, None)
        )
        simulator = Simulator(cfg)
        f0 = make_packet(simulator.grid, cfg.packet)
        series = worldline(
            f0, cfg.time.times(), propagator=simulator.propagator, keep_profiles=True
        )
        out_dir = _out_dir(out, config_path, cfg)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = write_spacetime_raster(
            series.profiles,
            series.mean_x,
            out_dir / "spacetime.ppm",
            width=cfg.raster.width,
            height=cfg.raster.height,
            x_window=cfg.raster.x_window,
        )
        console.print(f"[bold green]✓ Space-time diagram saved to {path}[/bold green]")

    except Exception as e:
        raise _fail(e)


@app.command()
def peaks(
    config_file: str = typer.Argument(..., help="Path to a run configuration file"),
    window: str = typer.Option(..., "--window", "-w", help="Tracking window LO:HI"),
    contrast: bool = typer.Option(
        False,
        "--contrast/--density",
        help="Track interference fringes instead of raw density maxima",
    ),
    assignments: Optional[List[str]] = typer.Option(None, "--set", "-s", help=_SET_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help="Packet kind"),
    t_max: Optional[float] = typer.Option(None, "--t-max", help="Final time"),
    frames: Optional[int] = typer.Option(None, "--frames", help="Number of frames"),
):
    """Follow local maxima inside a window and report their speeds."""
    configure_logging()
    try:
        lo_hi = _parse_window(window)
        _, cfg = _load_config(
            config_file, _overrides(assignments, kind, t_max, frames, None, None)
        )
        simulator = Simulator(cfg)
        f0 = make_packet(simulator.grid, cfg.packet)
        times = cfg.time.times()
        series = worldline(
            f0, times, propagator=simulator.propagator, keep_profiles=True
        )
        profiles = series.profiles
        if contrast:
            profiles = [
                interference_contrast(simulator.propagator.evolve_position(f0, t))
                for t in times
            ]

        result = track_peaks(profiles, lo_hi)
        _display_peaks(result, centroid_speed(series.profiles), contrast)

    except Exception as e:
        raise _fail(e)


@app.command()
def validate(
    config_file: str = typer.Argument(..., help="Path to a run configuration file"),
    assignments: Optional[List[str]] = typer.Option(None, "--set", "-s", help=_SET_HELP),
    kind: Optional[str] = typer.Option(None, "--kind", "-k", help="Packet kind"),
):
    configure_logging()
    try:
        _, cfg = _load_config(config_file, _overrides(assignments, kind, None, None, None, None))
        grid = cfg.grid.build()
        f0 = make_packet(grid, cfg.packet)
        g0 = to_momentum(f0)
        w_pos, w_neg = energy_weights(g0)

        console.print("\n[bold green]Configuration Valid![/bold green]")

        table = Table()
        table.add_column("Quantity", style="cyan")
        table.add_column("Value", style="yellow")
        table.add_row("Grid", f"n={grid.n}, l={grid.l:g}, dx={grid.dx:.4g}, p_max={grid.p_max:.4g}")
        table.add_row("Packet", cfg.packet.kind)
        table.add_row("Norm", f"{np.sqrt(f0.norm2()):.15f}")
        table.add_row("Positive-energy weight", f"{w_pos:.12f}")
        table.add_row("Negative-energy weight", f"{w_neg:.12f}")
        table.add_row("<p>", f"{mean_momentum(g0):.12f}")
        table.add_row("<v_cl>", f"{classical_velocity_mean(g0):.12f}")
        margin = grid.l - cfg.time.t_max - cfg.packet.extent
        table.add_row("Wrap-around margin", f"{margin:.4g}")
        console.print(table)

    except Exception as e:
        raise _fail(e)


def _display_manifest(manifest):
    table = Table(title="Run Artifacts")
    table.add_column("File", style="cyan")
    table.add_column("SHA-256", style="yellow")
    for name, digest in manifest.files.items():
        table.add_row(name, digest[:16])
    console.print(table)
    console.print(f"Duration: [bold]{manifest.duration:.2f} s[/bold]")
    console.print(f"[bold green]✓ Outputs saved to {manifest.out_dir}[/bold green]")


def _display_peaks(result, envelope_speed: float, contrast: bool):
    source = "interference fringes" if contrast else "density maxima"
    table = Table(title=f"Tracked {source} in [{result.window[0]:g}, {result.window[1]:g}]")
    table.add_column("Track", style="cyan")
    table.add_column("Start t", style="green")
    table.add_column("Frames", style="yellow")
    table.add_column("Speed", style="magenta")

    for index, track in enumerate(result.tracks):
        table.add_row(
            str(index),
            f"{track.times[0]:.4g}",
            str(len(track)),
            f"{track.speed:.4f}" if len(track) > 1 else "-",
        )
    console.print(table)
    console.print(f"\nPeak speed: [bold]{result.speed:.4f}[/bold]")
    console.print(f"Envelope centroid speed: [bold]{envelope_speed:.4f}[/bold]")
    if abs(result.speed) > 1:
        console.print("[bold yellow]⚠ Peaks move faster than light[/bold yellow]")


if __name__ == "__main__":
    app()
