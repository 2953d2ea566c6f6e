"""Spectral numerics for the quantum mathematical pendulum."""

from .errors import (
    AmbiguityError,
    BoundaryNotFoundError,
    ConvergenceError,
    DomainError,
    SeparatrixError,
)
from .mathieu import (
    MathieuClass,
    SpectralLevel,
    a_value,
    b_value,
    ce_series,
    characteristic_value,
    fourier_coefficients,
    se_series,
    spectral_level,
)
from .series import (
    TrigSeries,
    eval_series,
    inner_product,
    multiply_by_cos,
    multiply_by_sin,
    series_derivative,
)
from .states import (
    ObservableJump,
    QuantumState,
    StateFamily,
    StateSpec,
    build_state,
    density,
    density_maxima,
    jump_at_boundary,
    velocity_expect,
    velocity_sq_expect,
)
from .symmetry import (
    GapMeasure,
    GroupElement,
    PairingKind,
    RegionBoundary,
    Subgroup,
    apply_group_element,
    calibrate_epsilon,
    classify_region,
    find_boundary,
    pair_gap,
    subgroup_invariance_check,
    sweep_characteristics,
)
from .uncertainty import (
    UncertaintyReport,
    angular_moments,
    local_variance_inequality,
    ur_a,
    ur_b,
)
from .classical import (
    ArgConvention,
    ClassicalParams,
    EquilibriumKind,
    EquilibriumPoint,
    classify_equilibria,
    elliptic_K,
    jacobi_cn_dn,
    separatrix_frequency,
    trajectory,
)
from .torsion import (
    TorsionRotor,
    UniversalParams,
    load_preset,
    lorentz_to_universal,
    modulation_schedule,
    reduced_inertia,
    torsion_to_mathieu,
)

__all__ = [name for name in dir() if not name.startswith("_")]
