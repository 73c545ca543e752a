from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

import numpy as np

from ..errors import ArgumentError, GridMismatchError

Number = Union[int, float, complex]


def check_same_grid(a, b) -> None:
    if a.grid != b.grid:
        raise GridMismatchError(f"Grid mismatch: {a.grid} vs {b.grid}")
    if type(a) is not type(b):
        raise GridMismatchError(
            f"Cannot combine {type(a).__name__} with {type(b).__name__}"
        )


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Grid:
    """Uniform periodic position lattice on [-l, l) and its dual momentum lattice.

    Positions are x_j = -l + j*dx for j = 0..n-1. Momenta are stored in
    transform-natural (wrap-around) order: storage index m holds the signed
    index k = m for m < n/2 and k = m - n otherwise, with p_k = pi*k/l.
    """

    n: int = 2048
    l: float = 128.0

    def __post_init__(self):
        if self.n < 16 or self.n & (self.n - 1):
            raise ArgumentError(f"Grid size must be a power of two >= 16, got {self.n}")
        if not np.isfinite(self.l) or self.l <= 0:
            raise ArgumentError(f"Grid half-length must be positive, got {self.l}")

    @property
    def dx(self) -> float:
        return 2.0 * self.l / self.n

    @property
    def dp(self) -> float:
        return np.pi / self.l

    @property
    def p_max(self) -> float:
        return np.pi / self.dx

    @cached_property
    def x(self) -> np.ndarray:
        # (j - n/2)*dx keeps x_{n-j} = -x_j bitwise
        return _readonly((np.arange(self.n) - self.n // 2) * self.dx)

    @cached_property
    def k(self) -> np.ndarray:
        """Signed momentum index per storage slot."""
        return _readonly(np.fft.fftfreq(self.n, d=1.0 / self.n).astype(np.int64))

    @cached_property
    def p(self) -> np.ndarray:
        return _readonly(self.k * self.dp)

    @cached_property
    def order(self) -> np.ndarray:
        """Storage indices that list momenta in ascending order."""
        return _readonly(np.argsort(self.k, kind="stable"))

    def storage_index(self, k: int) -> int:
        if not -self.n // 2 <= k < self.n // 2:
            raise ArgumentError(f"Momentum index {k} outside [-{self.n // 2}, {self.n // 2})")
        return k % self.n

    def signed_index(self, m: int) -> int:
        return int(self.k[m])

    def reflect_index(self, j: int) -> int:
        return (self.n - j) % self.n


@dataclass(frozen=True)
class Spinor2:
    c1: complex = 0j
    c2: complex = 0j

    def norm2(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2

    def vdot(self, other: "Spinor2") -> complex:
        return self.c1.conjugate() * other.c1 + self.c2.conjugate() * other.c2

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=np.complex128)

    def __add__(self, other: "Spinor2") -> "Spinor2":
        return Spinor2(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "Spinor2") -> "Spinor2":
        return Spinor2(self.c1 - other.c1, self.c2 - other.c2)

    def __mul__(self, scalar: Number) -> "Spinor2":
        return Spinor2(self.c1 * scalar, self.c2 * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True)
class Mat2:
    a11: Number = 0
    a12: Number = 0
    a21: Number = 0
    a22: Number = 0

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def sigma1(cls) -> "Mat2":
        return cls(0, 1, 1, 0)

    @classmethod
    def sigma2(cls) -> "Mat2":
        return cls(0, -1j, 1j, 0)

    @classmethod
    def sigma3(cls) -> "Mat2":
        return cls(1, 0, 0, -1)

    @classmethod
    def from_array(cls, array) -> "Mat2":
        a = np.asarray(array)
        return cls(a[0, 0], a[0, 1], a[1, 0], a[1, 1])

    def as_array(self) -> np.ndarray:
        return np.array([[self.a11, self.a12], [self.a21, self.a22]], dtype=np.complex128)

    def trace(self) -> Number:
        return self.a11 + self.a22

    def det(self) -> Number:
        return self.a11 * self.a22 - self.a12 * self.a21

    def dagger(self) -> "Mat2":
        return Mat2(
            np.conj(self.a11), np.conj(self.a21), np.conj(self.a12), np.conj(self.a22)
        )

    def max_abs(self) -> float:
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))

    def is_hermitian(self, tol: float = 0.0) -> bool:
        return (self - self.dagger()).max_abs() <= tol

    def __matmul__(self, other):
        if isinstance(other, Spinor2):
            return Spinor2(
                self.a11 * other.c1 + self.a12 * other.c2,
                self.a21 * other.c1 + self.a22 * other.c2,
            )
        return Mat2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
        )

    def __sub__(self, other: "Mat2") -> "Mat2":
        return self + (-1) * other

    def __mul__(self, scalar: Number) -> "Mat2":
        return Mat2(
            self.a11 * scalar, self.a12 * scalar, self.a21 * scalar, self.a22 * scalar
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Mat2":
        return (-1) * self


@dataclass(frozen=True, eq=False)
class _GridField:
    grid: Grid
    values: np.ndarray
    time: float = 0.0
    measure: float = field(init=False, repr=False)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        if values.shape != (2, self.grid.n):
            raise ArgumentError(
                f"Spinor field must have shape (2, {self.grid.n}), got {values.shape}"
            )
        object.__setattr__(self, "values", _readonly(values))
        object.__setattr__(self, "time", float(self.time))
        object.__setattr__(self, "measure", self._measure())

    def _measure(self) -> float:
        raise NotImplementedError

    @property
    def psi1(self) -> np.ndarray:
        return self.values[0]

    @property
    def psi2(self) -> np.ndarray:
        return self.values[1]

    def spinor(self, index: int) -> Spinor2:
        return Spinor2(complex(self.values[0, index]), complex(self.values[1, index]))

    def pointwise_norm2(self) -> np.ndarray:
        return np.abs(self.values[0]) ** 2 + np.abs(self.values[1]) ** 2

    def norm2(self) -> float:
        return float(np.sum(self.pointwise_norm2()) * self.measure)

    def replace(self, values: np.ndarray, time: float = None):
        return type(self)(self.grid, values, self.time if time is None else time)

    def __add__(self, other):
        check_same_grid(self, other)
        return self.replace(self.values + other.values)

    def __sub__(self, other):
        check_same_grid(self, other)
        return self.replace(self.values - other.values)

    def __mul__(self, scalar: Number):
        return self.replace(self.values * scalar)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class SpinorField(_GridField):
    """Two-component state psi(x, t) sampled on the position grid."""

    def _measure(self) -> float:
        return self.grid.dx

    @classmethod
    def zeros(cls, grid: Grid, time: float = 0.0) -> "SpinorField":
        return cls(grid, np.zeros((2, grid.n), dtype=np.complex128), time)

    @classmethod
    def from_profile(
        cls, grid: Grid, profile: np.ndarray, spinor: Spinor2, time: float = 0.0
    ) -> "SpinorField":
        profile = np.asarray(profile, dtype=np.complex128)
        return cls(grid, np.stack([spinor.c1 * profile, spinor.c2 * profile]), time)


@dataclass(frozen=True, eq=False)
class MomentumSpinorField(_GridField):
    """Two-component momentum amplitudes in transform-natural order."""

    def _measure(self) -> float:
        return self.grid.dp

    def sorted_values(self):
        """Momenta and amplitudes in ascending momentum order."""
        order = self.grid.order
        return self.grid.p[order], self.values[:, order]
