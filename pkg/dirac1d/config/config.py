"""Line-based run configuration.

    # comment
    grid.n = 1024
    packet.kind = gauss11_boosted
    raster.x_window = -40:40

Missing keys take their defaults. Every error names the offending line;
command-line overrides report line 0.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np

from ..errors import ConfigError
from ..models import Grid
from ..wavepackets import PACKET_KINDS, PacketSpec
from .constants import (
    DEFAULT_FRAMES,
    DEFAULT_GRID_L,
    DEFAULT_GRID_N,
    DEFAULT_RASTER_HEIGHT,
    DEFAULT_RASTER_WIDTH,
    DEFAULT_SNAPSHOT_EVERY,
    DEFAULT_T_MAX,
    DEFAULT_X_WINDOW,
    DUPLICATE_KEY_MESSAGE,
    FALSE_WORDS,
    MALFORMED_LINE_MESSAGE,
    MIN_RASTER_SIZE,
    OVERRIDE_LINE,
    TRUE_WORDS,
    UNKNOWN_KEY_MESSAGE,
    WRAP_AROUND_MESSAGE,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridConfig:
    n: int = DEFAULT_GRID_N
    l: float = DEFAULT_GRID_L

    def __post_init__(self):
        Grid(self.n, self.l)

    def build(self) -> Grid:
        return Grid(self.n, self.l)


@dataclass(frozen=True)
class TimeConfig:
    t_max: float = DEFAULT_T_MAX
    frames: int = DEFAULT_FRAMES

    def __post_init__(self):
        if not self.t_max > 0 or not np.isfinite(self.t_max):
            raise ValueError(f"t_max must be positive and finite, got {self.t_max}")
        if self.frames < 2:
            raise ValueError(f"frames must be at least 2, got {self.frames}")

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.frames)


@dataclass(frozen=True)
class OutputConfig:
    observables: bool = True
    snapshots: bool = False
    snapshot_every: int = DEFAULT_SNAPSHOT_EVERY
    momentum: bool = True
    spacetime: bool = True

    def __post_init__(self):
        if self.snapshot_every < 1:
            raise ValueError(f"snapshot_every must be at least 1, got {self.snapshot_every}")


@dataclass(frozen=True)
class RasterConfig:
    width: int = DEFAULT_RASTER_WIDTH
    height: int = DEFAULT_RASTER_HEIGHT
    x_window: Tuple[float, float] = DEFAULT_X_WINDOW

    def __post_init__(self):
        if self.width < MIN_RASTER_SIZE or self.height < MIN_RASTER_SIZE:
            raise ValueError(
                f"raster must be at least {MIN_RASTER_SIZE}x{MIN_RASTER_SIZE}, "
                f"got {self.width}x{self.height}"
            )
        lo, hi = self.x_window
        if not lo < hi:
            raise ValueError(f"x_window needs lo < hi, got {lo}:{hi}")


@dataclass(frozen=True)
class RunConfig:
    grid: GridConfig = field(default_factory=GridConfig)
    packet: PacketSpec = field(default_factory=PacketSpec)
    time: TimeConfig = field(default_factory=TimeConfig)
    outputs: OutputConfig = field(default_factory=OutputConfig)
    raster: RasterConfig = field(default_factory=RasterConfig)

    def __post_init__(self):
        reach = self.time.t_max + self.packet.extent
        if not reach < self.grid.l:
            raise ValueError(WRAP_AROUND_MESSAGE.format(reach=reach, l=self.grid.l))

    def to_dict(self) -> dict:
        """Plain echo of every setting, JSON-serializable."""
        data = asdict(self)
        packet = data["packet"]
        for key in ("w1", "w2"):
            packet[key] = str(complex(packet[key]))
        data["raster"]["x_window"] = list(self.raster.x_window)
        return data


def _parse_bool(text: str) -> bool:
    word = text.lower()
    if word in TRUE_WORDS:
        return True
    if word in FALSE_WORDS:
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        value = float(text)
        if not value.is_integer():
            raise ValueError(f"expected an integer, got {text!r}") from None
        return int(value)


def _parse_float(text: str) -> float:
    value = float(text)
    if not np.isfinite(value):
        raise ValueError(f"expected a finite number, got {text!r}")
    return value


def _parse_complex(text: str) -> complex:
    value = complex(text.replace(" ", "").replace("i", "j"))
    if not np.isfinite(value):
        raise ValueError(f"expected a finite complex number, got {text!r}")
    return value


def _parse_kind(text: str) -> str:
    kind = text.lower()
    if kind not in PACKET_KINDS:
        raise ValueError(f"unknown packet kind {text!r}; expected one of {', '.join(PACKET_KINDS)}")
    return kind


def _parse_window(text: str) -> Tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise ValueError(f"expected 'lo:hi', got {text!r}")
    lo, hi = (_parse_float(part.strip()) for part in parts)
    if not lo < hi:
        raise ValueError(f"window needs lo < hi, got {text!r}")
    return lo, hi


KEYS: Dict[str, Callable[[str], object]] = {
    "grid.n": _parse_int,
    "grid.l": _parse_float,
    "packet.kind": _parse_kind,
    "packet.a": _parse_float,
    "packet.x0": _parse_float,
    "packet.q": _parse_float,
    "packet.w1": _parse_complex,
    "packet.w2": _parse_complex,
    "packet.p0": _parse_float,
    "packet.b": _parse_float,
    "time.t_max": _parse_float,
    "time.frames": _parse_int,
    "outputs.observables": _parse_bool,
    "outputs.snapshots": _parse_bool,
    "outputs.snapshot_every": _parse_int,
    "outputs.momentum": _parse_bool,
    "outputs.spacetime": _parse_bool,
    "raster.width": _parse_int,
    "raster.height": _parse_int,
    "raster.x_window": _parse_window,
}

_SECTIONS = {
    "grid": GridConfig,
    "packet": PacketSpec,
    "time": TimeConfig,
    "outputs": OutputConfig,
    "raster": RasterConfig,
}

# cross-field checks are blamed on the key most likely to need changing
_RUN_CHECK_KEYS = ("time.t_max", "grid.l", "packet.x0", "packet.a", "packet.b", "packet.kind")


def _split_line(text: str, line: int) -> Tuple[str, str]:
    key, sep, value = text.partition("=")
    key, value = key.strip(), value.strip()
    if not sep or not key or not value:
        raise ConfigError(MALFORMED_LINE_MESSAGE.format(text=text), line=line)
    if key not in KEYS:
        raise ConfigError(UNKNOWN_KEY_MESSAGE.format(key=key), line=line)
    return key, value


def _assign(values: dict, lines: dict, key: str, value: str, line: int) -> None:
    try:
        values[key] = KEYS[key](value)
    except ValueError as e:
        raise ConfigError(f"invalid value for {key}: {e}", line=line) from None
    lines[key] = line


def _first_line(lines: dict, keys: Iterable[str]) -> Optional[int]:
    for key in keys:
        if key in lines:
            return lines[key]
    return None


def parse_config(text: str, overrides: Iterable[str] = ()) -> RunConfig:
    """Parse configuration text, then apply `section.key=value` overrides."""
    values: Dict[str, object] = {}
    lines: Dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        key, value = _split_line(content, number)
        if key in lines:
            raise ConfigError(
                DUPLICATE_KEY_MESSAGE.format(key=key, first=lines[key]), line=number
            )
        _assign(values, lines, key, value, number)

    for override in overrides:
        key, value = _split_line(override.strip(), OVERRIDE_LINE)
        _assign(values, lines, key, value, OVERRIDE_LINE)

    sections = {}
    for name, cls in _SECTIONS.items():
        prefix = name + "."
        kwargs = {k[len(prefix):]: v for k, v in values.items() if k.startswith(prefix)}
        try:
            sections[name] = cls(**kwargs)
        except ValueError as e:
            keys = [k for k in lines if k.startswith(prefix)]
            raise ConfigError(str(e), line=_first_line(lines, keys)) from None

    try:
        config = RunConfig(**sections)
    except ValueError as e:
        raise ConfigError(str(e), line=_first_line(lines, _RUN_CHECK_KEYS)) from None

    logger.debug("Parsed config with %d explicit keys", len(values))
    return config
