"""Free nonrelativistic reference (m = hbar = 1).

A Gaussian stays Gaussian: its density spreads as a(t) = a sqrt(1 + t^2/(4 a^4))
independently of the mean momentum q, while the centre moves at speed q.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import ArgumentError
from ..models import Grid, SpinorField, inverse_transform_array, transform_array
from ..wavepackets import gaussian_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonrelGaussian:
    """Density proportional to exp(-(x - x0)^2 / (2 a^2)) at t = 0."""

    a: float
    x0: float = 0.0
    q: float = 0.0

    def __post_init__(self):
        if not np.isfinite(self.a) or self.a <= 0:
            raise ArgumentError(f"Gaussian width must be positive, got {self.a}")
        if not (np.isfinite(self.x0) and np.isfinite(self.q)):
            raise ArgumentError("Gaussian centre and momentum must be finite")


def nonrel_width(g: NonrelGaussian, t: float) -> float:
    return float(g.a * np.sqrt(1.0 + t * t / (4.0 * g.a**4)))


def nonrel_density(g: NonrelGaussian, t: float, x):
    width = nonrel_width(g, t)
    centre = g.x0 + g.q * t
    return np.exp(-np.square(np.asarray(x) - centre) / (2.0 * width * width)) / (
        np.sqrt(2.0 * np.pi) * width
    )


@dataclass(frozen=True, eq=False)
class ScalarField:
    """Single-component wave function on the position grid."""

    grid: Grid
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != (self.grid.n,):
            raise ArgumentError(
                f"Scalar field must have {self.grid.n} samples, got shape {values.shape}"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_spinor(cls, f: SpinorField) -> "ScalarField":
        """Upper component of a spinor field."""
        return cls(f.grid, f.psi1, f.time)

    def density(self) -> np.ndarray:
        return np.abs(self.values) ** 2

    def norm2(self) -> float:
        return float(np.sum(self.density()) * self.grid.dx)

    def mean_position(self) -> float:
        return float(np.sum(self.grid.x * self.density()) * self.grid.dx / self.norm2())

    def width(self) -> float:
        """Standard deviation of the density."""
        rho = self.density()
        norm2 = self.norm2()
        mean = np.sum(self.grid.x * rho) * self.grid.dx / norm2
        return float(np.sqrt(np.sum(np.square(self.grid.x - mean) * rho) * self.grid.dx / norm2))


def make_nonrel_packet(grid: Grid, g: NonrelGaussian) -> ScalarField:
    return ScalarField(grid, gaussian_profile(grid, g.a, g.x0, g.q))


def evolve_schrodinger(f0: ScalarField, t: float) -> ScalarField:
    if not np.isfinite(t):
        raise ArgumentError(f"Time must be finite, got {t}")
    grid = f0.grid
    spectrum = transform_array(f0.values, grid.dx) * np.exp(-0.5j * np.square(grid.p) * t)
    logger.debug("Schrodinger step to t=%g on n=%d", f0.time + t, grid.n)
    return ScalarField(grid, inverse_transform_array(spectrum, grid.dp), f0.time + t)
