import logging
from pathlib import Path
from typing import Sequence, Tuple, Union

import numpy as np
from PIL import Image

from ..errors import ArgumentError
from ..observables import DensityProfile

logger = logging.getLogger(__name__)

GRAY_LEVELS = 200
WORLDLINE_COLOR = (255, 255, 255)


def raster_columns(x_window: Tuple[float, float], width: int) -> np.ndarray:
    lo, hi = x_window
    return np.linspace(lo, hi, width)


def worldline_column(x: float, x_window: Tuple[float, float], width: int) -> int:
    lo, hi = x_window
    column = int(np.rint((x - lo) / (hi - lo) * (width - 1)))
    return min(max(column, 0), width - 1)


def spacetime_pixels(
    profiles: Sequence[DensityProfile],
    worldline: Sequence[float],
    width: int,
    height: int,
    x_window: Tuple[float, float],
) -> np.ndarray:
    """RGB array (height, width, 3); row 0 is the first frame.

    Each row shows the frame nearest in time, density interpolated onto the
    columns and scaled to 0..200 by the maximum over all frames. The worldline
    is drawn afterwards as one white pixel per row.
    """
    lo, hi = x_window
    if not lo < hi:
        raise ArgumentError(f"Degenerate raster window {lo}:{hi}")
    if len(profiles) < 2:
        raise ArgumentError(f"Space-time raster needs at least 2 frames, got {len(profiles)}")
    if len(worldline) != len(profiles):
        raise ArgumentError(
            f"Worldline has {len(worldline)} points for {len(profiles)} frames"
        )
    if width < 1 or height < 1:
        raise ArgumentError(f"Raster size must be positive, got {width}x{height}")

    columns = raster_columns(x_window, width)
    frames = np.rint(np.linspace(0, len(profiles) - 1, height)).astype(int)

    density = np.empty((height, width))
    for row, frame in enumerate(frames):
        profile = profiles[frame]
        density[row] = np.interp(columns, profile.grid.x, profile.values)

    peak = density.max()
    if peak > 0:
        gray = np.rint(density / peak * GRAY_LEVELS).astype(np.uint8)
    else:
        gray = np.zeros((height, width), dtype=np.uint8)

    pixels = np.repeat(gray[:, :, None], 3, axis=2)
    for row, frame in enumerate(frames):
        pixels[row, worldline_column(worldline[frame], x_window, width)] = WORLDLINE_COLOR
    return pixels


def write_spacetime_raster(
    profiles: Sequence[DensityProfile],
    worldline: Sequence[float],
    path: Union[str, Path],
    width: int = 512,
    height: int = 256,
    x_window: Tuple[float, float] = (-64.0, 64.0),
) -> Path:
    """Binary PPM (P6) space-time diagram with the mean-position worldline."""
    pixels = spacetime_pixels(profiles, worldline, width, height, x_window)
    path = Path(path)
    Image.fromarray(pixels).save(path, format="PPM")
    logger.debug("Wrote %dx%d raster to %s", width, height, path)
    return path


def read_ppm(path: Union[str, Path]) -> np.ndarray:
    with Image.open(path) as image:
        return np.asarray(image.convert("RGB"))
