from .config import (
    KEYS,
    GridConfig,
    OutputConfig,
    RasterConfig,
    RunConfig,
    TimeConfig,
    parse_config,
)

__all__ = [
    "KEYS",
    "GridConfig",
    "OutputConfig",
    "RasterConfig",
    "RunConfig",
    "TimeConfig",
    "parse_config",
]
