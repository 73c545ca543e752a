"""Inner products and the continuum-scaled Fourier pair.

Convention: psi_hat(p) = (2 pi)^(-1/2) * integral exp(-i p x) psi(x) dx, so the
plane wave exp(+i p x) synthesizes states. On the grid x_j = -l + j*dx the
offset -l contributes the factor exp(i p_k l) = (-1)^k, which equals (-1)^m for
storage index m because n is even.
"""

import numpy as np

from .models import MomentumSpinorField, SpinorField, check_same_grid

_SQRT_2PI = np.sqrt(2.0 * np.pi)


def inner_product(a, b) -> complex:
    """<a|b> with the measure of the fields' lattice (dx or dp)."""
    check_same_grid(a, b)
    return complex(np.sum(np.conj(a.values) * b.values) * a.measure)


def _alternating_sign(n: int) -> np.ndarray:
    return 1.0 - 2.0 * (np.arange(n) % 2)


def transform_array(values: np.ndarray, dx: float) -> np.ndarray:
    """Continuum-scaled forward transform along the last axis."""
    n = values.shape[-1]
    return (dx / _SQRT_2PI) * _alternating_sign(n) * np.fft.fft(values, axis=-1)


def inverse_transform_array(values: np.ndarray, dp: float) -> np.ndarray:
    n = values.shape[-1]
    return (n * dp / _SQRT_2PI) * np.fft.ifft(_alternating_sign(n) * values, axis=-1)


def to_momentum(f: SpinorField) -> MomentumSpinorField:
    return MomentumSpinorField(f.grid, transform_array(f.values, f.grid.dx), f.time)


def to_position(g: MomentumSpinorField) -> SpinorField:
    return SpinorField(g.grid, inverse_transform_array(g.values, g.grid.dp), g.time)
