"""Classical universal-Hamiltonian dynamics.

H = (omega'/2) dI^2 - U cos(phi): Jacobi-elliptic action trajectories,
the near-separatrix frequency law, and equilibrium classification.
Elliptic kernels are written out via AGM / descending Landen recursion
rather than taken from scipy, so the numerics here are self-contained
and independently testable against library oracles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SeparatrixError

AGM_TOL = 1e-15
_MAX_AGM_ITER = 64


@dataclass(frozen=True)
class ClassicalParams:
    """Universal pendulum parameters: nonlinearity, barrier, energy."""

    omega_prime: float
    U: float
    E: float

    def __post_init__(self):
        if self.U <= 0:
            raise DomainError(f"barrier U must be positive, got {self.U}")
        if self.omega_prime <= 0:
            raise DomainError(
                f"omega_prime must be positive, got {self.omega_prime}")

    @property
    def modulus(self) -> float:
        """k = sqrt(2U/(E+U)); in (0,1) for rotation (E > U), > 1 for libration."""
        if self.E + self.U <= 0:
            raise DomainError("E + U must be positive")
        return float(np.sqrt(2.0 * self.U / (self.E + self.U)))


class EquilibriumKind(enum.Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class EquilibriumPoint:
    phi_s: float
    kind: EquilibriumKind


class ArgConvention(enum.Enum):
    """Which elliptic argument the trajectory uses.

    AS_PRINTED keeps the omega' * sqrt((E+U) omega') * t form;
    DIMENSIONAL drops the leading omega' so the argument carries
    frequency units consistently.
    """

    AS_PRINTED = "as-printed"
    DIMENSIONAL = "dimensional"


def elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind, by AGM.

    K(k) = pi / (2 agm(1, sqrt(1 - k^2))); quadratic convergence.
    """
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must satisfy 0 <= k < 1, got {k}")
    a, b = 1.0, float(np.sqrt(1.0 - k * k))
    for _ in range(_MAX_AGM_ITER):
        if abs(a - b) <= AGM_TOL * a:
            break
        a, b = 0.5 * (a + b), float(np.sqrt(a * b))
    return float(np.pi / (2.0 * a))


def jacobi_cn_dn(u: float, k: float) -> tuple[float, float]:
    """cn(u, k) and dn(u, k) by the descending Landen (AGM) recursion."""
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"modulus must satisfy 0 <= k <= 1, got {k}")
    if k < 1e-12:
        return float(np.cos(u)), 1.0
    if k > 1.0 - 1e-12:
        sech = 1.0 / float(np.cosh(u))
        return sech, sech
    a = [1.0]
    b = [float(np.sqrt(1.0 - k * k))]
    c = [k]
    while abs(c[-1]) > AGM_TOL:
        a_next = 0.5 * (a[-1] + b[-1])
        b_next = float(np.sqrt(a[-1] * b[-1]))
        c_next = 0.5 * (a[-1] - b[-1])
        a.append(a_next)
        b.append(b_next)
        c.append(c_next)
        if len(a) > _MAX_AGM_ITER:
            break
    n = len(a) - 1
    phi = (2.0 ** n) * a[n] * u
    for i in range(n, 0, -1):
        phi = 0.5 * (phi + np.arcsin(np.clip(c[i] / a[i] * np.sin(phi), -1, 1)))
    sn = float(np.sin(phi))
    cn = float(np.cos(phi))
    dn = float(np.sqrt(max(1.0 - (k * sn) ** 2, 0.0)))
    return cn, dn


def trajectory(params: ClassicalParams, t_grid,
               convention: ArgConvention = ArgConvention.AS_PRINTED) -> np.ndarray:
    """Action deviation dI(t) on the rotation or libration branch.

    Rotation (E > U): dI = A dn(arg, k); libration (E < U):
    dI = A cn(arg, 1/k), where the reciprocal modulus 1/k already lies
    in (0, 1) because k > 1 on that branch. Returns rows (t, dI).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    amp = float(np.sqrt((params.E + params.U) * params.omega_prime))
    if params.E == params.U:
        raise SeparatrixError(
            "E = U sits on the separatrix; the envelope there is "
            "A sech(arg) — evaluate jacobi_cn_dn with k = 1 instead")
    rate = amp
    if convention is ArgConvention.AS_PRINTED:
        rate = params.omega_prime * amp
    k = params.modulus
    vals = np.empty_like(t_grid)
    if params.E > params.U:
        for i, t in enumerate(t_grid):
            vals[i] = amp * jacobi_cn_dn(rate * t, k)[1]
    else:
        kr = 1.0 / k  # k > 1 on the libration branch, so 1/k is in (0, 1)
        for i, t in enumerate(t_grid):
            vals[i] = amp * jacobi_cn_dn(rate * t, kr)[0]
    return np.column_stack([t_grid, vals])


def separatrix_frequency(E: float) -> float:
    """Oscillation frequency near the separatrix, omega = pi/ln(32/(1-E)).

    E is normalized so the separatrix sits at E = 1; the logarithm makes
    omega vanish logarithmically as E -> 1-. Any E below the separatrix
    with 32/(1-E) > 1 is admitted (the formula's unit-frequency anchor
    sits at E = 1 - 32 e^{-pi} < 0).
    """
    if not -31.0 < E < 1.0:
        raise DomainError(f"normalized energy must satisfy -31 < E < 1, got {E}")
    return float(np.pi / np.log(32.0 / (1.0 - E)))


def classify_equilibria(U_amplitude: float) -> list[EquilibriumPoint]:
    """Fixed points of H with potential -U cos(phi) on [0, 2pi).

    The stationary angles are phi = 0 and phi = pi; which one is the
    unstable saddle follows the sign of the curvature U cos(phi).
    """
    if U_amplitude == 0:
        raise DomainError("U = 0 leaves the rotor free; no isolated equilibria")
    if U_amplitude > 0:
        return [
            EquilibriumPoint(0.0, EquilibriumKind.HYPERBOLIC),
            EquilibriumPoint(float(np.pi), EquilibriumKind.ELLIPTIC),
        ]
    return [
        EquilibriumPoint(0.0, EquilibriumKind.ELLIPTIC),
        EquilibriumPoint(float(np.pi), EquilibriumKind.HYPERBOLIC),
    ]
