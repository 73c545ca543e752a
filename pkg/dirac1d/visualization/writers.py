"""CSV tables of the run artifacts.

Floats go through str(), the shortest repr that re-parses to the same value.
Rows are ascending in the first column.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

from ..models import SpinorField
from ..observables import MomentumDensityPair, ObservableSeries

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

OBSERVABLES_HEADER = ObservableSeries.COLUMNS
SNAPSHOT_HEADER = ("x", "rho", "re_psi1", "im_psi1", "re_psi2", "im_psi2")
MOMENTUM_HEADER = ("p", "rho_pos", "rho_neg")


def _write_table(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[float]]) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([float(value) for value in row])
            count += 1
    logger.debug("Wrote %d rows to %s", count, path)
    return path


def write_observables_csv(series: ObservableSeries, path: PathLike) -> Path:
    return _write_table(path, OBSERVABLES_HEADER, series.rows())


def write_snapshot_csv(f: SpinorField, path: PathLike) -> Path:
    rho = f.pointwise_norm2()
    columns = (f.grid.x, rho, f.psi1.real, f.psi1.imag, f.psi2.real, f.psi2.imag)
    return _write_table(path, SNAPSHOT_HEADER, zip(*columns))


def write_momentum_csv(pair: MomentumDensityPair, path: PathLike) -> Path:
    p, rho_pos, rho_neg = pair.sorted()
    return _write_table(path, MOMENTUM_HEADER, zip(p, rho_pos, rho_neg))


def read_csv(path: PathLike):
    """Header and float rows of a table written by this module."""
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = tuple(next(reader))
        rows = np.array([[float(value) for value in row] for row in reader])
    return header, rows
