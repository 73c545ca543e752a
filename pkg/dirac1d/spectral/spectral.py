import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import ArgumentError
from ..models import (
    Grid,
    Mat2,
    MomentumSpinorField,
    Spinor2,
    SpinorField,
    to_momentum,
    to_position,
)

logger = logging.getLogger(__name__)

_SQRT_2PI = np.sqrt(2.0 * np.pi)


class EnergySign(Enum):
    POS = "pos"
    NEG = "neg"

    @classmethod
    def parse(cls, value) -> "EnergySign":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().strip())
        except ValueError:
            raise ArgumentError(f"Unknown energy sign: {value!r}") from None

    @property
    def factor(self) -> int:
        return 1 if self is EnergySign.POS else -1


def dispersion(p):
    """lambda(p) = sqrt(p^2 + 1)."""
    return np.sqrt(np.square(p) + 1.0)


def _half_angle(p):
    # tan(theta) = p / (1 + lambda); continuous through p = 0
    return np.arctan2(p, 1.0 + dispersion(p))


def _check_time(t: float) -> float:
    if not np.isfinite(t):
        raise ArgumentError(f"Time must be finite, got {t}")
    return float(t)


def h0_matrix(p: float) -> Mat2:
    """Free Dirac Hamiltonian in momentum space, [[1, p], [p, -1]]."""
    if not np.isfinite(p):
        raise ArgumentError(f"Momentum must be finite, got {p}")
    p = float(p)
    return Mat2(1.0, p, p, -1.0)


def eigensystem(p: float) -> Tuple[float, Spinor2, Spinor2]:
    """Eigenvalue lambda(p) and the eigenvectors for +lambda and -lambda.

    Gauge: u_pos = (cos t, sin t), u_neg = (-sin t, cos t) with
    tan t = p / (1 + lambda), so u_pos(0) = (1, 0).
    """
    if not np.isfinite(p):
        raise ArgumentError(f"Momentum must be finite, got {p}")
    lam = float(dispersion(p))
    theta = float(_half_angle(p))
    c, s = np.cos(theta), np.sin(theta)
    return lam, Spinor2(complex(c), complex(s)), Spinor2(complex(-s), complex(c))


@dataclass(frozen=True, eq=False)
class ModeSystem:
    """Eigen-data of h0(p) for every momentum of a grid, in storage order."""

    grid: Grid
    p: np.ndarray
    lam: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        # instances are cached per grid and shared by every caller
        for array in (self.p, self.lam, self.theta):
            array.setflags(write=False)

    @classmethod
    def from_grid(cls, grid: Grid) -> "ModeSystem":
        return _mode_system(grid)

    @property
    def u_pos(self) -> np.ndarray:
        return np.stack([np.cos(self.theta), np.sin(self.theta)])

    @property
    def u_neg(self) -> np.ndarray:
        return np.stack([-np.sin(self.theta), np.cos(self.theta)])

    def h0(self) -> np.ndarray:
        """Stacked matrices, shape (n, 2, 2)."""
        h = np.empty((self.grid.n, 2, 2))
        h[:, 0, 0] = 1.0
        h[:, 0, 1] = self.p
        h[:, 1, 0] = self.p
        h[:, 1, 1] = -1.0
        return h

    def apply_h0(self, values: np.ndarray) -> np.ndarray:
        g1, g2 = values
        return np.stack([g1 + self.p * g2, self.p * g1 - g2])

    def projector(self, sign: EnergySign) -> np.ndarray:
        """Stacked P = (1 +/- h0/lambda)/2, shape (n, 2, 2)."""
        sign = EnergySign.parse(sign)
        eye = np.broadcast_to(np.eye(2), (self.grid.n, 2, 2))
        return 0.5 * (eye + sign.factor * self.h0() / self.lam[:, None, None])

    def project_values(self, values: np.ndarray, sign: EnergySign) -> np.ndarray:
        pos = 0.5 * (values + self.apply_h0(values) / self.lam)
        if EnergySign.parse(sign) is EnergySign.POS:
            return pos
        return values - pos

    def mode_matrix(self, t: float) -> np.ndarray:
        """Stacked exp(-i h0 t), shape (n, 2, 2)."""
        eye = np.broadcast_to(np.eye(2), (self.grid.n, 2, 2))
        cos_t = np.cos(self.lam * t)[:, None, None]
        sin_t = (np.sin(self.lam * t) / self.lam)[:, None, None]
        return cos_t * eye - 1j * sin_t * self.h0()

    def propagate_values(self, values: np.ndarray, t: float) -> np.ndarray:
        # exp(-i h0 t) = cos(lambda t) - i sin(lambda t) h0 / lambda
        cos_t = np.cos(self.lam * t)
        sin_t = np.sin(self.lam * t) / self.lam
        return cos_t * values - 1j * sin_t * self.apply_h0(values)


@lru_cache(maxsize=16)
def _mode_system(grid: Grid) -> ModeSystem:
    p = np.array(grid.p, dtype=float)
    logger.debug("Building mode system for n=%d, l=%g", grid.n, grid.l)
    return ModeSystem(grid=grid, p=p, lam=dispersion(p), theta=_half_angle(p))


def project(g: MomentumSpinorField, sign) -> MomentumSpinorField:
    modes = ModeSystem.from_grid(g.grid)
    return g.replace(modes.project_values(g.values, EnergySign.parse(sign)))


def evolve(g0: MomentumSpinorField, t: float) -> MomentumSpinorField:
    """Exact free evolution of t = 0 momentum data to time t."""
    return DiracPropagator().evolve(g0, t)


def evolve_position(f0: SpinorField, t: float) -> SpinorField:
    return to_position(evolve(to_momentum(f0), t))


def evolve_quadrature_oracle(
    f0: SpinorField, t: float, x_points: Sequence[float]
) -> List[Spinor2]:
    """Direct superposition of plane waves at the requested points.

    Slow O(N*M) sum over the momentum lattice with the energy-sign coefficient
    functions of f0; uniform (periodic trapezoidal) weights. Used only as an
    independent check of the transform propagator.
    """
    t = _check_time(t)
    x_points = np.asarray(x_points, dtype=float).ravel()
    if x_points.size == 0:
        raise ArgumentError("Quadrature oracle needs at least one point")

    g0 = to_momentum(f0)
    modes = ModeSystem.from_grid(f0.grid)
    coeff_pos = modes.project_values(g0.values, EnergySign.POS)
    coeff_neg = g0.values - coeff_pos
    amplitude = (
        np.exp(-1j * modes.lam * t) * coeff_pos + np.exp(1j * modes.lam * t) * coeff_neg
    )

    plane_waves = np.exp(1j * np.outer(x_points, modes.p))
    psi = (f0.grid.dp / _SQRT_2PI) * (plane_waves @ amplitude.T)
    return [Spinor2(complex(a), complex(b)) for a, b in psi]


class Propagator(ABC):
    """Free evolution acting on t = 0 momentum data."""

    relativistic: bool = True

    @abstractmethod
    def _propagate(self, values: np.ndarray, grid: Grid, t: float) -> np.ndarray:
        pass

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    def evolve(self, g0: MomentumSpinorField, t: float) -> MomentumSpinorField:
        t = _check_time(t)
        return g0.replace(self._propagate(g0.values, g0.grid, t), time=g0.time + t)

    def evolve_position(self, f0: SpinorField, t: float) -> SpinorField:
        return to_position(self.evolve(to_momentum(f0), t))


class DiracPropagator(Propagator):
    def _propagate(self, values: np.ndarray, grid: Grid, t: float) -> np.ndarray:
        return ModeSystem.from_grid(grid).propagate_values(values, t)

    @property
    def name(self) -> str:
        return "Free Dirac (spectral)"


class SchrodingerPropagator(Propagator):
    """Nonrelativistic reference, exp(-i p^2 t / 2) on every component."""

    relativistic = False

    def _propagate(self, values: np.ndarray, grid: Grid, t: float) -> np.ndarray:
        return np.exp(-0.5j * np.square(grid.p) * t) * values

    @property
    def name(self) -> str:
        return "Free Schrodinger (spectral)"


def create_propagator(kind: str) -> Propagator:
    kind = kind.lower().strip()
    if kind in ["dirac", "relativistic"]:
        return DiracPropagator()
    elif kind in ["schrodinger", "nonrelativistic"]:
        return SchrodingerPropagator()
    else:
        raise ArgumentError(f"Unknown propagator: {kind}")
