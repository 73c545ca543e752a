from .raster import read_ppm, spacetime_pixels, worldline_column, write_spacetime_raster
from .writers import (
    MOMENTUM_HEADER,
    OBSERVABLES_HEADER,
    SNAPSHOT_HEADER,
    read_csv,
    write_momentum_csv,
    write_observables_csv,
    write_snapshot_csv,
)

__all__ = [
    "read_ppm",
    "spacetime_pixels",
    "worldline_column",
    "write_spacetime_raster",
    "MOMENTUM_HEADER",
    "OBSERVABLES_HEADER",
    "SNAPSHOT_HEADER",
    "read_csv",
    "write_momentum_csv",
    "write_observables_csv",
    "write_snapshot_csv",
]
