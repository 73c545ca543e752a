import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..errors import ArgumentError, ResolutionError
from ..models import Grid, MomentumSpinorField, Spinor2, SpinorField, to_momentum, to_position
from ..spectral import EnergySign, ModeSystem
from .constants import (
    BOOST_MOMENTUM,
    EXTENT_WIDTHS,
    GAUSS10_EXPONENT,
    GAUSS10_NORM,
    GAUSS10_WIDTH,
    GAUSS11_EXPONENT,
    GAUSS11_NORM,
    GAUSS11_WIDTH,
    PACKET_KINDS,
    POSNEG_EXPONENT,
    POSNEG_MOMENTUM,
    RESOLUTION_TOLERANCE,
    UNRESOLVED_MOMENTUM_MESSAGE,
    UNRESOLVED_POSITION_MESSAGE,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PacketSpec:
    """Initial condition selector plus the parameters of the custom Gaussian.

    a is the standard deviation of the position density at t = 0, x0 the
    centre, q the phase momentum and (w1, w2) the spinor weights. p0 and b
    are the momentum centres +/-p0 and momentum-space exponent of the
    positive/negative energy pair.
    """

    kind: str = "gauss11"
    a: float = GAUSS11_WIDTH
    x0: float = 0.0
    q: float = 0.0
    w1: complex = 1.0
    w2: complex = 1.0
    p0: float = POSNEG_MOMENTUM
    b: float = POSNEG_EXPONENT

    def __post_init__(self):
        if self.kind not in PACKET_KINDS:
            raise ArgumentError(
                f"Unknown packet kind {self.kind!r}; expected one of {', '.join(PACKET_KINDS)}"
            )
        if not self.a > 0:
            raise ArgumentError("Packet width a must be positive")
        if not self.b > 0:
            raise ArgumentError("Packet momentum exponent b must be positive")
        if self.w1 == 0 and self.w2 == 0:
            raise ArgumentError("Spinor weights must not both be zero")
        for name in ("a", "x0", "q", "w1", "w2", "p0", "b"):
            if not np.isfinite(getattr(self, name)):
                raise ArgumentError(f"Packet parameter {name} must be finite")

    @property
    def width(self) -> float:
        """Position density standard deviation of the packet at t = 0."""
        if self.kind in ("gauss11", "gauss11_boosted"):
            return GAUSS11_WIDTH
        if self.kind == "gauss10":
            return GAUSS10_WIDTH
        if self.kind == "posneg_pair":
            return posneg_width(self.b)
        return self.a

    @property
    def extent(self) -> float:
        return abs(self.x0) + EXTENT_WIDTHS * self.width


def posneg_width(b: float) -> float:
    # momentum amplitude exp(-b p^2) gives a position density exp(-x^2 / (2 b))
    return float(np.sqrt(b))


def gaussian_profile(grid: Grid, a: float, x0: float = 0.0, q: float = 0.0) -> np.ndarray:
    """Normalized scalar Gaussian whose density has standard deviation a."""
    x = grid.x
    norm = (2.0 * np.pi * a * a) ** -0.25
    return norm * np.exp(-np.square(x - x0) / (4.0 * a * a) + 1j * q * x)


def check_resolution(f: SpinorField) -> SpinorField:
    amplitude = np.sqrt(f.pointwise_norm2())
    peak = amplitude.max()
    if not np.isfinite(peak):
        raise ResolutionError("The packet has non-finite amplitudes")
    edge = max(amplitude[0], amplitude[-1])
    if peak == 0 or edge > RESOLUTION_TOLERANCE * peak:
        ratio = edge / peak if peak else np.inf
        raise ResolutionError(UNRESOLVED_POSITION_MESSAGE.format(ratio=ratio))

    spectrum = np.sqrt(to_momentum(f).pointwise_norm2())
    nyquist = spectrum[f.grid.n // 2]
    if nyquist > RESOLUTION_TOLERANCE * spectrum.max():
        raise ResolutionError(
            UNRESOLVED_MOMENTUM_MESSAGE.format(
                p_max=f.grid.p_max, ratio=nyquist / spectrum.max()
            )
        )
    return f


def _check_extent(grid: Grid, width: float, x0: float = 0.0) -> None:
    if abs(x0) + EXTENT_WIDTHS * width > grid.l:
        raise ResolutionError(
            f"Domain half-length {grid.l} is smaller than the packet extent "
            f"{abs(x0) + EXTENT_WIDTHS * width:g} ({EXTENT_WIDTHS:g} widths)"
        )


def make_gauss11(grid: Grid) -> SpinorField:
    _check_extent(grid, GAUSS11_WIDTH)
    profile = GAUSS11_NORM * np.exp(-GAUSS11_EXPONENT * np.square(grid.x))
    return check_resolution(SpinorField.from_profile(grid, profile, Spinor2(1, 1)))


def make_gauss11_boosted(grid: Grid) -> SpinorField:
    f = make_gauss11(grid)
    return check_resolution(f.replace(f.values * np.exp(1j * BOOST_MOMENTUM * grid.x)))


def make_gauss10(grid: Grid) -> SpinorField:
    _check_extent(grid, GAUSS10_WIDTH)
    profile = GAUSS10_NORM * np.exp(-GAUSS10_EXPONENT * np.square(grid.x))
    return check_resolution(SpinorField.from_profile(grid, profile, Spinor2(1, 0)))


def posneg_parts(
    grid: Grid, p0: float = POSNEG_MOMENTUM, b: float = POSNEG_EXPONENT
) -> Tuple[SpinorField, SpinorField]:
    """Positive- and negative-energy constituents, sharing one normalization N."""
    _check_extent(grid, posneg_width(b))
    modes = ModeSystem.from_grid(grid)
    p = modes.p
    zeros = np.zeros_like(p)

    upper = np.stack([np.exp(-b * np.square(p - p0)), zeros])
    lower = np.stack([zeros, np.exp(-b * np.square(p + p0))])
    part_pos = modes.project_values(upper, EnergySign.POS)
    part_neg = modes.project_values(lower, EnergySign.NEG)

    total = MomentumSpinorField(grid, part_pos + part_neg)
    scale = 1.0 / np.sqrt(total.norm2())
    return (
        to_position(MomentumSpinorField(grid, scale * part_pos)),
        to_position(MomentumSpinorField(grid, scale * part_neg)),
    )


def make_posneg_pair(
    grid: Grid, p0: float = POSNEG_MOMENTUM, b: float = POSNEG_EXPONENT
) -> SpinorField:
    part_pos, part_neg = posneg_parts(grid, p0, b)
    return check_resolution(part_pos + part_neg)


def make_custom(grid: Grid, spec: PacketSpec) -> SpinorField:
    _check_extent(grid, spec.a, spec.x0)
    weights = np.array([spec.w1, spec.w2], dtype=np.complex128)
    w1, w2 = weights / np.linalg.norm(weights)
    profile = gaussian_profile(grid, spec.a, spec.x0, spec.q)
    return check_resolution(SpinorField.from_profile(grid, profile, Spinor2(w1, w2)))


def translate(f: SpinorField, x0: float) -> SpinorField:
    """Exact shift by x0 through the momentum phase exp(-i p x0)."""
    g = to_momentum(f)
    return to_position(g.replace(g.values * np.exp(-1j * f.grid.p * x0)))


def parity(f: SpinorField) -> SpinorField:
    """P: psi(x) -> sigma3 psi(-x), with sample j reflected to (n - j) mod n."""
    reflected = f.values[:, (-np.arange(f.grid.n)) % f.grid.n]
    return f.replace(np.stack([reflected[0], -reflected[1]]))


_FACTORIES = {
    "gauss11": make_gauss11,
    "gauss11_boosted": make_gauss11_boosted,
    "gauss10": make_gauss10,
}


def make_packet(grid: Grid, spec: PacketSpec) -> SpinorField:
    if spec.kind == "custom":
        return make_custom(grid, spec)
    if spec.kind == "schrodinger":
        return make_custom(
            grid, PacketSpec("custom", spec.a, spec.x0, spec.q, 1.0, 0.0)
        )

    if spec.kind == "posneg_pair":
        f = make_posneg_pair(grid, spec.p0, spec.b)
    else:
        f = _FACTORIES[spec.kind](grid)
    if spec.x0:
        _check_extent(grid, spec.width, spec.x0)
        f = check_resolution(translate(f, spec.x0))
    logger.debug("Built %s packet, norm^2 = %.15f", spec.kind, f.norm2())
    return f
