DEFAULT_GRID_N = 2048
DEFAULT_GRID_L = 128.0
DEFAULT_T_MAX = 50.0
DEFAULT_FRAMES = 256
DEFAULT_SNAPSHOT_EVERY = 32
DEFAULT_RASTER_WIDTH = 512
DEFAULT_RASTER_HEIGHT = 256
DEFAULT_X_WINDOW = (-64.0, 64.0)
MIN_RASTER_SIZE = 16

OVERRIDE_LINE = 0

TRUE_WORDS = ("true", "yes", "on", "1")
FALSE_WORDS = ("false", "no", "off", "0")

MALFORMED_LINE_MESSAGE = "expected 'section.key = value', got {text!r}"
UNKNOWN_KEY_MESSAGE = "unknown key {key!r}"
DUPLICATE_KEY_MESSAGE = "key {key!r} already set on line {first}"
WRAP_AROUND_MESSAGE = (
    "t_max + packet extent = {reach:g} must stay below grid.l = {l:g} "
    "(light-cone wrap-around on the periodic domain)"
)
