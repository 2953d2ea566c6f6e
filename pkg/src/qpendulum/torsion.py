"""Parameter maps onto the dimensionless pendulum barrier l.

Two physical front ends feed the Mathieu machinery: hindered internal
rotation of a symmetric-top molecule (reduced inertia + n-fold cosine
barrier) and the driven Lorentz-model nonlinear oscillator. Both
produce a barrier strength l and an energy scale converting Mathieu
characteristic values back to physical energies.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .symmetry import classify_region

HBAR_SI = 1.054571817e-34  # J s


def reduced_inertia(I1: float, I2: float) -> float:
    """I = I1 I2 / (I1 + I2) for two coaxial rigid parts."""
    if I1 <= 0 or I2 <= 0:
        raise DomainError("moments of inertia must be positive")
    return I1 * I2 / (I1 + I2)


@dataclass(frozen=True)
class TorsionRotor:
    """A molecule with an n-fold internal-rotation barrier.

    Units are SI: kg m^2 for the inertias, joules for the barrier.
    ``hbar`` is fixed to the physical constant; override it only when
    working in rescaled hbar = 1 units.
    """

    I1: float
    I2: float
    V0: float
    n_fold: int
    hbar: float = HBAR_SI

    def __post_init__(self):
        if self.I1 <= 0 or self.I2 <= 0 or self.V0 < 0:
            raise DomainError("inertias must be positive and V0 nonnegative")
        if self.n_fold < 1:
            raise DomainError(f"n_fold must be >= 1, got {self.n_fold}")

    @property
    def reduced(self) -> float:
        return reduced_inertia(self.I1, self.I2)


@dataclass(frozen=True)
class UniversalParams:
    omega_prime: float
    U: float
    l: float
    energy_scale: float
    metadata: dict = field(default_factory=dict)


def torsion_to_mathieu(rotor: TorsionRotor) -> UniversalParams:
    """Map the torsional Hamiltonian to the dimensionless pendulum.

    Substituting theta = n phi / 2 turns the n-fold cosine barrier into
    the standard cos(2 theta) form with l = 2 I V0 / (n^2 hbar^2);
    physical energies are energy_scale * E_mathieu + V0/2, with
    energy_scale = n^2 hbar^2 / (8 I). The half-period phase shift that
    flips the cosine sign is recorded in the metadata.
    """
    I = rotor.reduced
    n2 = rotor.n_fold ** 2
    l = 2.0 * I * rotor.V0 / (n2 * rotor.hbar ** 2)
    scale = n2 * rotor.hbar ** 2 / (8.0 * I)
    omega_prime = n2 * rotor.hbar / (4.0 * I)  # d(dE/dJ)/dJ of the free top
    return UniversalParams(
        omega_prime=omega_prime,
        U=rotor.V0 / 2.0,
        l=l,
        energy_scale=scale,
        metadata={"phase_shift": "phi -> phi + pi/2",
                  "offset": rotor.V0 / 2.0},
    )


def lorentz_to_universal(m: float, omega0: float, mu: float,
                         V0: float, I0: float,
                         hbar: float = 1.0) -> UniversalParams:
    """Driven anharmonic-oscillator reduction to the universal pendulum.

    omega' = 3 pi mu / (2 m omega0^2), U = V0 sqrt(I0 / (m omega0)),
    l = 8 U / (hbar^2 omega'). Defaults to rescaled hbar = 1 units
    since the oscillator parameters are typically dimensionless there.
    """
    if m <= 0 or omega0 <= 0:
        raise DomainError("m and omega0 must be positive")
    if mu == 0:
        raise DomainError("mu = 0 gives zero nonlinearity; l is undefined")
    if I0 < 0:
        raise DomainError("I0 must be nonnegative")
    omega_prime = 3.0 * np.pi * mu / (2.0 * m * omega0 ** 2)
    U = V0 * np.sqrt(I0 / (m * omega0))
    l = 8.0 * U / (hbar ** 2 * omega_prime)
    return UniversalParams(omega_prime=float(omega_prime), U=float(U),
                           l=float(l),
                           energy_scale=hbar ** 2 * omega_prime / 8.0)


@dataclass(frozen=True)
class SchedulePoint:
    t: float
    l: float
    regions: dict
    crossing: bool


def modulation_schedule(l_c: float, delta_l: float, omega: float,
                        t_grid, levels,
                        eps_rotor: float, eps_well: float) -> list[SchedulePoint]:
    """Quasi-static barrier sweep l(t) = l_c + delta_l cos(omega t).

    For each time the symmetry region of every requested level is
    classified at the instantaneous barrier; a point is marked as a
    crossing when any level's region differs from the previous time.
    """
    if delta_l <= 0:
        raise DomainError("delta_l must be positive")
    if not levels:
        raise DomainError("at least one level is required")
    t_grid = np.asarray(t_grid, dtype=float)
    out: list[SchedulePoint] = []
    prev: dict | None = None
    for t in t_grid:
        l_t = max(l_c + delta_l * np.cos(omega * t), 0.0)
        regions = {n: classify_region(n, l_t, eps_rotor, eps_well)
                   for n in levels}
        crossing = prev is not None and regions != prev
        out.append(SchedulePoint(float(t), float(l_t), regions, crossing))
        prev = regions
    return out


def load_preset(name: str) -> TorsionRotor:
    """Read a molecule preset (key=value text) shipped with the package."""
    ref = importlib.resources.files("qpendulum.data") / f"{name}.preset"
    try:
        text = ref.read_text()
    except FileNotFoundError:
        raise DomainError(f"unknown preset {name!r}") from None
    fields = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    try:
        return TorsionRotor(
            I1=float(fields["I1"]),
            I2=float(fields["I2"]),
            V0=float(fields["V0_J"]),
            n_fold=int(fields["n_fold"]),
        )
    except KeyError as exc:
        raise DomainError(f"preset {name!r} missing key {exc}") from None
