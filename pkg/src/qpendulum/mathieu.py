"""Mathieu eigenproblem on [0, 2pi): -psi'' + 2 l cos(2 phi) psi = E psi.

Each parity family reduces to a symmetric tridiagonal matrix over its
harmonic ladder; characteristic values and Fourier coefficients come from
an adaptive-truncation eigensolve. The returned coefficient vectors live
directly on the orthonormal basis of :mod:`qpendulum.series`, so states
built here have unit L2 norm over one period by construction.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import ConvergenceError, DomainError
from .series import TrigSeries

EIGENVALUE_TOL = 1e-11  # relative; LAPACK bisection jitter sits near 1e-12
TRUNCATION_CAP = 512
TAIL_TOL = 1e-14


class MathieuClass(enum.Enum):
    """The four parity families of periodic Mathieu functions."""

    CE_EVEN = "ce_even"  # cos(2r phi),        orders 0, 2, 4, ...
    CE_ODD = "ce_odd"    # cos((2r+1) phi),    orders 1, 3, 5, ...
    SE_ODD = "se_odd"    # sin((2r+1) phi),    orders 1, 3, 5, ...
    SE_EVEN = "se_even"  # sin((2r+2) phi),    orders 2, 4, 6, ...

    @property
    def is_cosine(self) -> bool:
        return self in (MathieuClass.CE_EVEN, MathieuClass.CE_ODD)

    def validate_order(self, n: int) -> None:
        if n < 0 or not isinstance(n, (int, np.integer)):
            raise DomainError(f"order must be a nonnegative integer, got {n!r}")
        even = n % 2 == 0
        if self is MathieuClass.CE_EVEN and not even:
            raise DomainError(f"ce-even admits even orders only, got n={n}")
        if self in (MathieuClass.CE_ODD, MathieuClass.SE_ODD) and even:
            raise DomainError(f"{self.value} admits odd orders only, got n={n}")
        if self is MathieuClass.SE_EVEN and (even is False or n < 2):
            raise DomainError(f"se-even admits even orders >= 2, got n={n}")

    def harmonics(self, size: int) -> np.ndarray:
        r = np.arange(size)
        if self is MathieuClass.CE_EVEN:
            return 2 * r
        if self is MathieuClass.SE_EVEN:
            return 2 * r + 2
        return 2 * r + 1

    def eigen_index(self, n: int) -> int:
        """Position of order n in the ascending spectrum of its family."""
        self.validate_order(n)
        if self is MathieuClass.CE_EVEN:
            return n // 2
        if self is MathieuClass.SE_EVEN:
            return n // 2 - 1
        return (n - 1) // 2


def ce_class(n: int) -> MathieuClass:
    return MathieuClass.CE_EVEN if n % 2 == 0 else MathieuClass.CE_ODD


def se_class(n: int) -> MathieuClass:
    if n < 1:
        raise DomainError(f"se requires order >= 1, got n={n}")
    return MathieuClass.SE_EVEN if n % 2 == 0 else MathieuClass.SE_ODD


@dataclass(frozen=True)
class SpectralLevel:
    """One Mathieu eigenpair at fixed barrier l.

    ``coeffs`` are the orthonormal-basis weights of the wavefunction:
    slot r of CE_EVEN multiplies cos(2r phi)/sqrt(pi) for r >= 1 and
    1/sqrt(2 pi) for r = 0; the other families have no constant slot.
    """

    mathieu_class: MathieuClass
    n: int
    l: float
    value: float
    coeffs: np.ndarray
    truncation: int

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=float).copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)


def _tridiagonal(mathieu_class: MathieuClass, q: float, size: int):
    """Symmetric tridiagonal matrix bands for one parity family.

    The CE_EVEN first row carries a sqrt(2) scaling so the matrix stays
    symmetric; it is consistent with the orthonormal basis, so the
    eigenvector needs no undo before use as series coefficients.
    """
    off = np.full(size - 1, q)
    if mathieu_class is MathieuClass.CE_EVEN:
        diag = (2.0 * np.arange(size)) ** 2
        off = off.copy()
        off[0] = np.sqrt(2.0) * q
    elif mathieu_class is MathieuClass.CE_ODD:
        diag = (2.0 * np.arange(size) + 1.0) ** 2
        diag[0] = 1.0 + q
    elif mathieu_class is MathieuClass.SE_ODD:
        diag = (2.0 * np.arange(size) + 1.0) ** 2
        diag[0] = 1.0 - q
    else:
        diag = (2.0 * np.arange(size) + 2.0) ** 2
    return diag, off

def initial_truncation(n: int, l: float) -> int:
    return max(32, n + 8 * int(np.ceil(np.sqrt(max(l, 0.0)))))


@functools.lru_cache(maxsize=16384)
def _solve(mathieu_class: MathieuClass, n: int, l: float, cap: int):
    """Adaptive-truncation eigensolve; cached on exact arguments.

    Doubles the matrix size until the eigenvalue moves by less than
    EIGENVALUE_TOL, then extracts the eigenvector at the final size.
    """
    mathieu_class.validate_order(n)
    if l < 0:
        raise DomainError(f"barrier l must be nonnegative, got {l}")
    k = mathieu_class.eigen_index(n)
    size = max(initial_truncation(n, l), k + 2)
    prev = None
    while True:
        diag, off = _tridiagonal(mathieu_class, l, size)
        value = eigh_tridiagonal(
            diag, off, eigvals_only=True, select="i", select_range=(k, k)
        )[0]
        if prev is not None and abs(value - prev) < EIGENVALUE_TOL * max(
            1.0, abs(value)
        ):
            break
        if size >= cap:
            raise ConvergenceError(
                f"eigenvalue not converged at truncation cap {cap} for "
                f"({mathieu_class.value}, n={n}, l={l})",
                last_iterates=(prev, value),
            )
        prev = value
        size = min(2 * size, cap)
    _, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(k, k))
    vec = vecs[:, 0]
    # sign convention: weight of the order-matching harmonic positive
    match = np.flatnonzero(mathieu_class.harmonics(size) == n)[0]
    if vec[match] < 0:
        vec = -vec
    vec = vec.copy()
    vec.setflags(write=False)
    return float(value), vec, size


def characteristic_value(
    mathieu_class: MathieuClass, n: int, l: float, cap: int = TRUNCATION_CAP
) -> float:
    """Characteristic value E_n(l) of the given parity family."""
    return _solve(mathieu_class, int(n), float(l), int(cap))[0]


def fourier_coefficients(
    mathieu_class: MathieuClass, n: int, l: float, cap: int = TRUNCATION_CAP
) -> np.ndarray:
    """Unit-norm orthonormal-basis weights, order-matching slot positive."""
    return _solve(mathieu_class, int(n), float(l), int(cap))[1]


def spectral_level(
    mathieu_class: MathieuClass, n: int, l: float, cap: int = TRUNCATION_CAP
) -> SpectralLevel:
    value, vec, size = _solve(mathieu_class, int(n), float(l), int(cap))
    return SpectralLevel(mathieu_class, int(n), float(l), value, vec, size)


def build_series(level: SpectralLevel) -> TrigSeries:
    """Place the level's coefficients on their orthonormal basis slots."""
    harm = level.mathieu_class.harmonics(len(level.coeffs))
    kmax = int(harm[-1])
    cos_k = np.zeros(kmax, dtype=np.complex128)
    sin_k = np.zeros(kmax, dtype=np.complex128)
    c0 = 0.0
    if level.mathieu_class.is_cosine:
        for k, w in zip(harm, level.coeffs):
            if k == 0:
                c0 = w
            else:
                cos_k[k - 1] = w
    else:
        for k, w in zip(harm, level.coeffs):
            sin_k[k - 1] = w
    return TrigSeries(c0, cos_k, sin_k)


def ce_series(n: int, l: float, cap: int = TRUNCATION_CAP) -> TrigSeries:
    return build_series(spectral_level(ce_class(n), n, l, cap))


def se_series(n: int, l: float, cap: int = TRUNCATION_CAP) -> TrigSeries:
    return build_series(spectral_level(se_class(n), n, l, cap))


def a_value(n: int, l: float, cap: int = TRUNCATION_CAP) -> float:
    """Even-family characteristic value a_n(l)."""
    return characteristic_value(ce_class(n), n, l, cap)


def b_value(n: int, l: float, cap: int = TRUNCATION_CAP) -> float:
    """Odd-family characteristic value b_n(l)."""
    return characteristic_value(se_class(n), n, l, cap)
