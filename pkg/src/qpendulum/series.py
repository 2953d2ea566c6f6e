"""Truncated trigonometric series on [0, 2pi) in an orthonormal basis.

The basis is {1/sqrt(2 pi)} + {cos(k phi)/sqrt(pi)} + {sin(k phi)/sqrt(pi)},
k >= 1, which is orthonormal for the plain L2 inner product on one period.
All operator algebra (derivatives, multiplication by sin/cos, inner
products) is done exactly on the coefficients; nothing here samples the
angle except :func:`eval_series`.

Coefficients are stored complex so superposition states with relative
phase i are first-class citizens.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_SQRT2 = np.sqrt(2.0)


def _as_coeffs(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128).copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class TrigSeries:
    """Immutable coefficient vector over the orthonormal trig basis.

    ``c0`` multiplies 1/sqrt(2 pi); ``cos_k[i]`` multiplies
    cos((i+1) phi)/sqrt(pi); ``sin_k[i]`` multiplies sin((i+1) phi)/sqrt(pi).
    """

    c0: complex = 0.0
    cos_k: np.ndarray = field(default_factory=lambda: _as_coeffs([]))
    sin_k: np.ndarray = field(default_factory=lambda: _as_coeffs([]))

    def __post_init__(self):
        object.__setattr__(self, "c0", complex(self.c0))
        object.__setattr__(self, "cos_k", _as_coeffs(self.cos_k))
        object.__setattr__(self, "sin_k", _as_coeffs(self.sin_k))

    @property
    def n_harmonics(self) -> int:
        return max(len(self.cos_k), len(self.sin_k))

    def cos_coeff(self, k: int) -> complex:
        if k == 0:
            return self.c0
        return complex(self.cos_k[k - 1]) if k <= len(self.cos_k) else 0.0

    def sin_coeff(self, k: int) -> complex:
        return complex(self.sin_k[k - 1]) if k <= len(self.sin_k) else 0.0

    def __add__(self, other: "TrigSeries") -> "TrigSeries":
        n = max(self.n_harmonics, other.n_harmonics)
        return TrigSeries(
            self.c0 + other.c0,
            _pad(self.cos_k, n) + _pad(other.cos_k, n),
            _pad(self.sin_k, n) + _pad(other.sin_k, n),
        )

    def __sub__(self, other: "TrigSeries") -> "TrigSeries":
        return self + (other * (-1.0))

    def __mul__(self, scalar) -> "TrigSeries":
        z = complex(scalar)
        return TrigSeries(self.c0 * z, self.cos_k * z, self.sin_k * z)

    __rmul__ = __mul__

    def conj(self) -> "TrigSeries":
        return TrigSeries(np.conj(self.c0), np.conj(self.cos_k), np.conj(self.sin_k))

    def norm(self) -> float:
        return float(np.sqrt(inner_product(self, self).real))


def _pad(arr: np.ndarray, n: int) -> np.ndarray:
    if len(arr) >= n:
        return np.asarray(arr, dtype=np.complex128)
    out = np.zeros(n, dtype=np.complex128)
    out[: len(arr)] = arr
    return out


def inner_product(s1: TrigSeries, s2: TrigSeries) -> complex:
    """<s1|s2> on [0, 2pi); conjugate-linear in the first argument.

    By orthonormality this is an exact finite sum, not a quadrature.
    """
    n = max(s1.n_harmonics, s2.n_harmonics)
    out = np.conj(s1.c0) * s2.c0
    out += np.vdot(_pad(s1.cos_k, n), _pad(s2.cos_k, n))
    out += np.vdot(_pad(s1.sin_k, n), _pad(s2.sin_k, n))
    return complex(out)


def series_derivative(s: TrigSeries) -> TrigSeries:
    """d/dphi in coefficient space.

    cos(k phi) feeds the sin slot with -k, sin(k phi) feeds the cos slot
    with +k, and the constant dies.
    """
    n = s.n_harmonics
    k = np.arange(1, n + 1)
    return TrigSeries(0.0, k * _pad(s.sin_k, n), -k * _pad(s.cos_k, n))


def multiply_by_cos(s: TrigSeries) -> TrigSeries:
    """Exact product cos(phi) * s via the product-to-sum shift.

    Harmonic k couples to k +- 1; the constant couples to k = 1 with a
    sqrt(2) weight from the mismatched basis normalizations. Truncation
    grows by one harmonic.
    """
    n = s.n_harmonics + 1
    a = _pad(s.cos_k, n)
    b = _pad(s.sin_k, n)
    new_cos = np.zeros(n, dtype=np.complex128)
    new_sin = np.zeros(n, dtype=np.complex128)

    new_cos[0] += s.c0 / _SQRT2
    new_c0 = a[0] / _SQRT2  # k=1 -> constant, sqrt(2) from basis mismatch
    # cos * cos_k -> half into k-1 and k+1 (k=1 -> 0 handled above)
    new_cos[1:] += a[:-1] / 2.0
    new_cos[:-1] += a[1:] / 2.0
    # cos * sin_k -> half into k-1 and k+1; sin(0) vanishes
    new_sin[1:] += b[:-1] / 2.0
    new_sin[:-1] += b[1:] / 2.0
    return TrigSeries(new_c0, new_cos, new_sin)


def multiply_by_sin(s: TrigSeries) -> TrigSeries:
    """Exact product sin(phi) * s; mirror image of :func:`multiply_by_cos`."""
    n = s.n_harmonics + 1
    a = _pad(s.cos_k, n)
    b = _pad(s.sin_k, n)
    new_cos = np.zeros(n, dtype=np.complex128)
    new_sin = np.zeros(n, dtype=np.complex128)

    new_sin[0] += s.c0 / _SQRT2
    new_c0 = b[0] / _SQRT2  # k=1 -> constant
    # sin * cos_k = (sin(k+1) - sin(k-1))/2; sin(0) vanishes
    new_sin[1:] += a[:-1] / 2.0
    new_sin[:-1] -= a[1:] / 2.0
    # sin * sin_k = (cos(k-1) - cos(k+1))/2 (k=1 -> 0 handled above)
    new_cos[:-1] += b[1:] / 2.0
    new_cos[1:] -= b[:-1] / 2.0
    return TrigSeries(new_c0, new_cos, new_sin)


def multiply_by_cos2phi(s: TrigSeries) -> TrigSeries:
    """cos(2 phi) * s, composed as 2 cos * cos - identity."""
    return multiply_by_cos(multiply_by_cos(s)) * 2.0 - s


def eval_series(s: TrigSeries, phi) -> complex | np.ndarray:
    """Pointwise value of the series; 2pi-periodic by construction."""
    phi = np.asarray(phi, dtype=float)
    out = np.full(phi.shape, s.c0 / np.sqrt(2.0 * np.pi), dtype=np.complex128)
    for i, a in enumerate(s.cos_k):
        if a != 0:
            out += a * np.cos((i + 1) * phi) / np.sqrt(np.pi)
    for i, b in enumerate(s.sin_k):
        if b != 0:
            out += b * np.sin((i + 1) * phi) / np.sqrt(np.pi)
    if out.shape == ():
        return complex(out)
    return out
