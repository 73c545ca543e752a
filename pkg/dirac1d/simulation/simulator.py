import hashlib
import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .. import __version__
from ..config import RunConfig
from ..models import SpinorField, to_momentum
from ..observables import (
    MomentumDensityPair,
    ObservableSeries,
    momentum_decomposition,
    worldline,
)
from ..spectral import Propagator, create_propagator
from ..visualization import (
    write_momentum_csv,
    write_observables_csv,
    write_snapshot_csv,
    write_spacetime_raster,
)
from ..wavepackets import make_packet

logger = logging.getLogger(__name__)

OBSERVABLES_FILE = "observables.csv"
MOMENTUM_FILE = "momentum.csv"
SPACETIME_FILE = "spacetime.ppm"
SNAPSHOT_DIR = "snapshots"
MANIFEST_FILE = "manifest.json"


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


@dataclass
class SimulationResult:
    propagator: str
    initial: SpinorField
    series: ObservableSeries
    momentum: MomentumDensityPair
    snapshots: List[Tuple[int, SpinorField]] = field(default_factory=list)

    @property
    def times(self) -> np.ndarray:
        return self.series.times


@dataclass
class RunManifest:
    """Echo of a run: settings, version, wall time and checksummed outputs."""

    config: dict
    version: str
    duration: float
    out_dir: Path
    files: Dict[str, str] = field(default_factory=dict)

    def verify(self) -> List[str]:
        """Relative paths that are missing or whose content changed."""
        bad = []
        for name, digest in self.files.items():
            path = self.out_dir / name
            if not path.is_file() or _sha256(path) != digest:
                bad.append(name)
        return bad

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "duration_s": self.duration,
            "config": self.config,
            "files": [{"path": name, "sha256": digest} for name, digest in self.files.items()],
        }

    def write(self) -> Path:
        path = self.out_dir / MANIFEST_FILE
        path.write_text(json.dumps(self.to_dict(), indent=2) + "\n", encoding="utf-8")
        return path


class Simulator:
    def __init__(self, config: RunConfig, verbose: bool = False):
        self.config = config
        self.verbose = verbose
        self.grid = config.grid.build()
        kind = "schrodinger" if config.packet.kind == "schrodinger" else "dirac"
        self.propagator: Propagator = create_propagator(kind)

    def run(self) -> SimulationResult:
        cfg = self.config
        times = cfg.time.times()
        logger.info(
            "Simulating %s packet with %s: n=%d, l=%g, %d frames to t=%g",
            cfg.packet.kind,
            self.propagator.name,
            self.grid.n,
            self.grid.l,
            cfg.time.frames,
            cfg.time.t_max,
        )

        f0 = make_packet(self.grid, cfg.packet)
        series = worldline(
            f0, times, propagator=self.propagator, keep_profiles=cfg.outputs.spacetime
        )

        snapshots = []
        if cfg.outputs.snapshots:
            for frame in range(0, len(times), cfg.outputs.snapshot_every):
                snapshots.append(
                    (frame, self.propagator.evolve_position(f0, float(times[frame])))
                )

        if self.verbose:
            logger.info(
                "<x> from %.6f to %.6f, max |norm - 1| = %.3e",
                series.mean_x[0],
                series.mean_x[-1],
                float(np.max(np.abs(series.norm - 1.0))),
            )

        return SimulationResult(
            propagator=self.propagator.name,
            initial=f0,
            series=series,
            momentum=momentum_decomposition(to_momentum(f0)),
            snapshots=snapshots,
        )

    def write(self, result: SimulationResult, out_dir: Union[str, Path]) -> Dict[str, str]:
        """Emit the requested artifacts in a fixed order; returns path -> sha256."""
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        outputs = self.config.outputs
        raster = self.config.raster
        written: List[Path] = []

        if outputs.observables:
            written.append(write_observables_csv(result.series, out_dir / OBSERVABLES_FILE))
        if outputs.momentum:
            written.append(write_momentum_csv(result.momentum, out_dir / MOMENTUM_FILE))
        if outputs.snapshots:
            snapshot_dir = out_dir / SNAPSHOT_DIR
            snapshot_dir.mkdir(exist_ok=True)
            for frame, f in result.snapshots:
                written.append(
                    write_snapshot_csv(f, snapshot_dir / f"snapshot_{frame:04d}.csv")
                )
        if outputs.spacetime:
            written.append(
                write_spacetime_raster(
                    result.series.profiles,
                    result.series.mean_x,
                    out_dir / SPACETIME_FILE,
                    width=raster.width,
                    height=raster.height,
                    x_window=raster.x_window,
                )
            )

        for path in written:
            logger.info("Wrote %s", path)
        return {path.relative_to(out_dir).as_posix(): _sha256(path) for path in written}


def run_simulation(
    cfg: RunConfig, out_dir: Union[str, Path], verbose: bool = False
) -> RunManifest:
    """Simulate, emit artifacts into out_dir and write manifest.json."""
    started = time.perf_counter()
    simulator = Simulator(cfg, verbose=verbose)
    result = simulator.run()
    files = simulator.write(result, out_dir)
    manifest = RunManifest(
        config=cfg.to_dict(),
        version=__version__,
        duration=time.perf_counter() - started,
        out_dir=Path(out_dir),
        files=files,
    )
    manifest.write()
    logger.info("Run finished in %.2f s, %d files", manifest.duration, len(files))
    return manifest


def default_run_name(config_path: Optional[Union[str, Path]], cfg: RunConfig) -> str:
    stem = Path(config_path).stem if config_path else "run"
    return f"{stem}-{cfg.packet.kind}"
