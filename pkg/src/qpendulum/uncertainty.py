"""Angular uncertainty products for pendulum states.

ur_a = (dLz)^2 (d sin phi)^2 - 1/4 (d cos phi)^2 and ur_b is the same
with sin and cos swapped. All moments are exact coefficient-space
contractions; no quadrature enters except in tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .series import (
    inner_product,
    multiply_by_cos,
    multiply_by_sin,
    series_derivative,
)
from .states import QuantumState, StateSpec, density, density_minima

_SIN2_IDENTITY_TOL = 1e-12


@dataclass(frozen=True)
class UncertaintyReport:
    spec: StateSpec
    exp_sin: float
    exp_cos: float
    exp_sin2: float
    exp_cos2: float
    exp_Lz: float
    exp_Lz2: float
    var_sin: float
    var_cos: float
    var_Lz: float
    ur_a: float
    ur_b: float


def _real(z: complex) -> float:
    return float(np.real(z))


def angular_moments(state: QuantumState) -> UncertaintyReport:
    """All sin/cos/L_z moments of the state, exactly in coefficient space."""
    s = state.series
    sin_s = multiply_by_sin(s)
    cos_s = multiply_by_cos(s)
    ds = series_derivative(s)

    exp_sin = _real(inner_product(s, sin_s))
    exp_cos = _real(inner_product(s, cos_s))
    exp_sin2 = _real(inner_product(sin_s, sin_s))
    exp_cos2 = _real(inner_product(cos_s, cos_s))
    # L_z = -i d/dphi; <Lz> = -i <s|s'>, <Lz^2> = <s'|s'>
    exp_lz = _real(-1j * inner_product(s, ds))
    exp_lz2 = _real(inner_product(ds, ds))

    if abs(exp_sin2 + exp_cos2 - 1.0) > 1e-10:
        raise AssertionError(
            f"sin^2 + cos^2 closure violated: {exp_sin2 + exp_cos2}")

    var_sin = exp_sin2 - exp_sin ** 2
    var_cos = exp_cos2 - exp_cos ** 2
    var_lz = exp_lz2 - exp_lz ** 2
    return UncertaintyReport(
        spec=state.spec,
        exp_sin=exp_sin, exp_cos=exp_cos,
        exp_sin2=exp_sin2, exp_cos2=exp_cos2,
        exp_Lz=exp_lz, exp_Lz2=exp_lz2,
        var_sin=var_sin, var_cos=var_cos, var_Lz=var_lz,
        ur_a=var_lz * var_sin - 0.25 * var_cos,
        ur_b=var_lz * var_cos - 0.25 * var_sin,
    )


def ur_a(state: QuantumState) -> float:
    return angular_moments(state).ur_a


def ur_b(state: QuantumState) -> float:
    return angular_moments(state).ur_b


@dataclass(frozen=True)
class LocalInequality:
    phi_max: float
    window: tuple[float, float]
    phi2: float
    lhs: float
    rhs: float
    holds: bool


def _local_second_moment(state: QuantumState, phi_m: float,
                         lo: float, hi: float, points: int = 2048) -> float:
    """<(phi - phi_m)^2> of |psi|^2 restricted to (lo, hi), renormalized."""
    phi = np.linspace(lo, hi, points)
    rho = density(state, np.mod(phi, 2.0 * np.pi))[:, 1]
    weight = np.trapezoid(rho, phi)
    if weight <= 0:
        raise DomainError("density vanishes on the local window")
    return float(np.trapezoid(rho * (phi - phi_m) ** 2, phi) / weight)


def local_variance_inequality(state: QuantumState) -> list[LocalInequality]:
    """Small-angle uncertainty check near each density maximum.

    <phi^2> is the second moment of |psi|^2 about the maximum over the
    window bounded by the adjacent density minima; when no usable minima
    exist the window falls back to +-pi/(2n). lhs = dLz * <phi^2>,
    rhs = (1 - <phi^2>/2)/4.
    """
    from .states import density_maxima  # local import avoids cycle noise

    maxima = density_maxima(state)
    if not maxima:
        raise DomainError("state has no strict density maxima")
    minima = density_minima(state)
    n = max(state.spec.n, 1)
    dlz = float(np.sqrt(max(angular_moments(state).var_Lz, 0.0)))
    out = []
    for phi_m in maxima:
        lo = hi = None
        if len(minima) >= 2:
            below = [m for m in minima if m < phi_m] or [minima[-1] - 2 * np.pi]
            above = [m for m in minima if m > phi_m] or [minima[0] + 2 * np.pi]
            lo, hi = max(below), min(above)
        if lo is None or hi - lo < 1e-6:
            lo, hi = phi_m - np.pi / (2 * n), phi_m + np.pi / (2 * n)
        phi2 = _local_second_moment(state, phi_m, lo, hi)
        lhs = dlz * phi2
        rhs = 0.25 * (1.0 - 0.5 * phi2)
        out.append(LocalInequality(phi_m, (lo, hi), phi2, lhs, rhs, lhs >= rhs))
    return out
