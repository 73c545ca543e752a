import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from ..errors import ArgumentError, DegenerateStateError, DivergenceError, NumericError
from ..models import Grid, MomentumSpinorField, SpinorField, to_momentum, to_position
from ..spectral import DiracPropagator, EnergySign, ModeSystem, Propagator, dispersion

logger = logging.getLogger(__name__)

DEGENERATE_NORM2 = 1e-12
HERMITICITY_TOLERANCE = 1e-10
CONTRAST_FLOOR = 1e-8


@dataclass(frozen=True, eq=False)
class Profile:
    """Real-valued samples on the position grid at one time."""

    grid: Grid
    values: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.grid.n,):
            raise ArgumentError(
                f"Profile must have {self.grid.n} samples, got shape {values.shape}"
            )
        object.__setattr__(self, "values", values)


@dataclass(frozen=True, eq=False)
class DensityProfile(Profile):
    def __post_init__(self):
        super().__post_init__()
        if np.any(self.values < 0):
            raise ArgumentError("Density must be nonnegative")

    @property
    def rho(self) -> np.ndarray:
        return self.values

    def integral(self) -> float:
        return float(np.sum(self.values) * self.grid.dx)


@dataclass(frozen=True, eq=False)
class ContrastProfile(Profile):
    """Interference term normalized by the incoherent density, in [-1, 1]."""


@dataclass(frozen=True, eq=False)
class MomentumDensityPair:
    grid: Grid
    rho_pos: np.ndarray
    rho_neg: np.ndarray

    def total(self) -> float:
        return float(np.sum(self.rho_pos + self.rho_neg) * self.grid.dp)

    def sorted(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        order = self.grid.order
        return self.grid.p[order], self.rho_pos[order], self.rho_neg[order]


@dataclass
class ObservableSeries:
    times: np.ndarray
    mean_x: np.ndarray
    mean_p: np.ndarray
    norm: np.ndarray
    mean_vcl: np.ndarray
    mean_Z: np.ndarray
    var_x: np.ndarray
    profiles: list = field(default_factory=list, repr=False)

    COLUMNS = ("t", "mean_x", "mean_p", "norm", "mean_vcl", "zbw_x", "var_x")

    def __len__(self) -> int:
        return len(self.times)

    def rows(self) -> Iterator[Tuple[float, ...]]:
        columns = (
            self.times,
            self.mean_x,
            self.mean_p,
            self.norm,
            self.mean_vcl,
            self.mean_Z,
            self.var_x,
        )
        for row in zip(*columns):
            yield tuple(float(value) for value in row)

    def residual(self) -> np.ndarray:
        """mean_x(t) - mean_x(0) - <v_cl> t - <Z(t)>."""
        return self.mean_x - self.mean_x[0] - self.mean_vcl * self.times - self.mean_Z


def _checked_norm2(field_) -> float:
    norm2 = field_.norm2()
    if norm2 < DEGENERATE_NORM2:
        raise DegenerateStateError(f"State norm^2 {norm2:.3e} is below {DEGENERATE_NORM2}")
    return norm2


def density(f: SpinorField) -> DensityProfile:
    return DensityProfile(f.grid, f.pointwise_norm2(), f.time)


def mean_position(f: SpinorField) -> float:
    norm2 = _checked_norm2(f)
    return float(np.sum(f.grid.x * f.pointwise_norm2()) * f.grid.dx / norm2)


def variance_position(f: SpinorField) -> float:
    norm2 = _checked_norm2(f)
    rho = f.pointwise_norm2()
    mean = np.sum(f.grid.x * rho) * f.grid.dx / norm2
    return float(np.sum(np.square(f.grid.x - mean) * rho) * f.grid.dx / norm2)


def mean_momentum(g: MomentumSpinorField) -> float:
    norm2 = _checked_norm2(g)
    return float(np.sum(g.grid.p * g.pointwise_norm2()) * g.grid.dp / norm2)


def momentum_decomposition(g: MomentumSpinorField) -> MomentumDensityPair:
    modes = ModeSystem.from_grid(g.grid)
    pos = modes.project_values(g.values, EnergySign.POS)
    neg = g.values - pos
    return MomentumDensityPair(
        g.grid,
        np.sum(np.abs(pos) ** 2, axis=0),
        np.sum(np.abs(neg) ** 2, axis=0),
    )


def energy_weights(g: MomentumSpinorField) -> Tuple[float, float]:
    pair = momentum_decomposition(g)
    dp = g.grid.dp
    return float(np.sum(pair.rho_pos) * dp), float(np.sum(pair.rho_neg) * dp)


def classical_velocity_mean(g: MomentumSpinorField) -> float:
    """<v_cl> with v_cl = +p/lambda on positive and -p/lambda on negative energies."""
    norm2 = _checked_norm2(g)
    pair = momentum_decomposition(g)
    velocity = g.grid.p / dispersion(g.grid.p)
    return float(np.sum(velocity * (pair.rho_pos - pair.rho_neg)) * g.grid.dp / norm2)


def zbw_matrices(grid: Grid, t: float) -> np.ndarray:
    """Per-mode Z(t) = (2i h0)^-1 (exp(2i h0 t) - 1)(sigma1 - p h0^-1), shape (n, 2, 2).

    With exp(2i h0 t) = cos(2 lambda t) + i sin(2 lambda t) h0/lambda this
    reduces to B A, B = (lambda sin - i (cos - 1) h0) / (2 lambda^2) and
    A = sigma1 - p h0 / lambda^2 = [[-p, 1], [1, p]] / lambda^2.
    """
    if not np.isfinite(t):
        raise ArgumentError(f"Time must be finite, got {t}")
    modes = ModeSystem.from_grid(grid)
    p, lam = modes.p, modes.lam
    lam2 = np.square(lam)
    cos2 = np.cos(2.0 * lam * t)
    sin2 = np.sin(2.0 * lam * t)

    b = (-1j * (cos2 - 1.0) / (2.0 * lam2))[:, None, None] * modes.h0()
    b[:, 0, 0] += sin2 / (2.0 * lam)
    b[:, 1, 1] += sin2 / (2.0 * lam)

    a = np.empty((grid.n, 2, 2))
    a[:, 0, 0] = -p / lam2
    a[:, 0, 1] = 1.0 / lam2
    a[:, 1, 0] = 1.0 / lam2
    a[:, 1, 1] = p / lam2
    return b @ a


def zbw_mean(g0: MomentumSpinorField, t: float) -> float:
    norm2 = _checked_norm2(g0)
    z = zbw_matrices(g0.grid, t)
    zg = np.einsum("kij,jk->ik", z, g0.values)
    value = np.sum(np.conj(g0.values) * zg) * g0.grid.dp / norm2
    if abs(value.imag) > HERMITICITY_TOLERANCE:
        raise NumericError(f"<Z(t)> has imaginary part {value.imag:.3e}")
    return float(value.real)


def instantaneous_velocity_mean(f: SpinorField) -> float:
    """<sigma1>, the Heisenberg velocity dx/dt = sigma1."""
    norm2 = _checked_norm2(f)
    overlap = np.sum(np.conj(f.psi1) * f.psi2) * f.grid.dx
    return float(2.0 * overlap.real / norm2)


def phase_velocity(p: float, sign) -> float:
    if p == 0:
        raise DivergenceError("Phase velocity diverges at p = 0")
    return float(EnergySign.parse(sign).factor * dispersion(p) / p)


def group_velocity(p: float, sign) -> float:
    return float(EnergySign.parse(sign).factor * p / dispersion(p))


def split_energy(f: SpinorField) -> Tuple[SpinorField, SpinorField]:
    g = to_momentum(f)
    modes = ModeSystem.from_grid(f.grid)
    pos = modes.project_values(g.values, EnergySign.POS)
    return to_position(g.replace(pos)), to_position(g.replace(g.values - pos))


def interference_contrast(f: SpinorField) -> ContrastProfile:
    f_pos, f_neg = split_energy(f)
    cross = 2.0 * np.sum(np.conj(f_pos.values) * f_neg.values, axis=0).real
    incoherent = f_pos.pointwise_norm2() + f_neg.pointwise_norm2()
    mask = incoherent > CONTRAST_FLOOR * incoherent.max()
    contrast = np.zeros_like(incoherent)
    contrast[mask] = cross[mask] / incoherent[mask]
    return ContrastProfile(f.grid, contrast, f.time)


def _check_times(times: Sequence[float]) -> np.ndarray:
    times = np.asarray(times, dtype=float).ravel()
    if times.size == 0:
        raise ArgumentError("Worldline needs at least one time")
    if not np.all(np.isfinite(times)):
        raise ArgumentError("Worldline times must be finite")
    if np.any(np.diff(times) < 0):
        raise ArgumentError("Worldline times must be ascending")
    return times


def worldline(
    f0: SpinorField,
    times: Sequence[float],
    propagator: Optional[Propagator] = None,
    keep_profiles: bool = False,
) -> ObservableSeries:
    """Observables at each time, each evolved independently from t = 0."""
    times = _check_times(times)
    propagator = propagator or DiracPropagator()
    g0 = to_momentum(f0)
    if propagator.relativistic:
        vcl = classical_velocity_mean(g0)
    else:
        vcl = mean_momentum(g0)

    columns = {name: np.empty(times.size) for name in ("x", "p", "norm", "z", "var")}
    profiles = []
    for i, t in enumerate(times):
        g = propagator.evolve(g0, t)
        f = to_position(g)
        columns["x"][i] = mean_position(f)
        columns["p"][i] = mean_momentum(g)
        columns["norm"][i] = np.sqrt(f.norm2())
        columns["z"][i] = zbw_mean(g0, t) if propagator.relativistic else 0.0
        columns["var"][i] = variance_position(f)
        if keep_profiles:
            profiles.append(density(f))
        logger.debug("t=%.4f <x>=%.6f <Z>=%.6f", t, columns["x"][i], columns["z"][i])

    return ObservableSeries(
        times=times,
        mean_x=columns["x"],
        mean_p=columns["p"],
        norm=columns["norm"],
        mean_vcl=np.full(times.size, vcl),
        mean_Z=columns["z"],
        var_x=columns["var"],
        profiles=profiles,
    )
