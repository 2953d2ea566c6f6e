import numpy as np
import pytest

from qpendulum.errors import BoundaryNotFoundError, DomainError
from qpendulum.mathieu import ce_series, se_series
from qpendulum.series import TrigSeries, eval_series, inner_product
from qpendulum.symmetry import (
    GapMeasure,
    GroupElement,
    PairingKind,
    Subgroup,
    apply_group_element,
    classify_region,
    compose,
    find_boundary,
    pair_gap,
    subgroup_invariance_check,
    sweep_characteristics,
    well_pair_for_level,
)
from qpendulum.states import StateFamily, StateSpec, build_state

RNG = np.random.default_rng(7)
GRID = np.linspace(0.0, 2.0 * np.pi, 512, endpoint=False)

ANGLE_MAP = {
    GroupElement.E: lambda phi: phi,
    GroupElement.A: lambda phi: -phi,
    GroupElement.B: lambda phi: np.pi - phi,
    GroupElement.C: lambda phi: np.pi + phi,
}


def random_series():
    n = 5
    return TrigSeries(
        complex(*RNG.normal(size=2)),
        RNG.normal(size=n) + 1j * RNG.normal(size=n),
        RNG.normal(size=n) + 1j * RNG.normal(size=n),
    )


@pytest.mark.parametrize("g", list(GroupElement))
def test_group_action_is_angle_substitution(g):
    for _ in range(5):
        s = random_series()
        np.testing.assert_allclose(
            eval_series(apply_group_element(s, g), GRID),
            eval_series(s, ANGLE_MAP[g](GRID)),
            atol=1e-12,
        )


def test_composition_table_on_random_series():
    elements = list(GroupElement)
    for _ in range(100):
        s = random_series()
        g1, g2 = RNG.choice(elements, size=2)
        lhs = apply_group_element(apply_group_element(s, g2), g1)
        rhs = apply_group_element(s, compose(g1, g2))
        assert (lhs - rhs).norm() < 1e-14


def test_klein_group_axioms():
    for g in GroupElement:
        assert compose(g, g) is GroupElement.E
        assert compose(GroupElement.E, g) is g
    assert compose(GroupElement.A, GroupElement.B) is GroupElement.C
    assert compose(GroupElement.C, GroupElement.B) is GroupElement.A


@pytest.mark.parametrize("l", [0.0, 3.42, 23.93])
@pytest.mark.parametrize("n", range(1, 9))
def test_parity_eigenrelations(n, l):
    ce = ce_series(n, l)
    se = se_series(n, l)
    assert (apply_group_element(ce, GroupElement.A) - ce).norm() < 1e-12
    assert (apply_group_element(se, GroupElement.A) + se).norm() < 1e-12


@pytest.mark.parametrize("family,subgroup", [
    (StateFamily.PHI_PLUS, Subgroup.G_MINUS),
    (StateFamily.PHI_MINUS, Subgroup.G_MINUS),
    (StateFamily.XI, Subgroup.G_ZERO),
    (StateFamily.ETA, Subgroup.G_ZERO),
    (StateFamily.PSI_PLUS, Subgroup.G_PLUS),
    (StateFamily.PSI_MINUS, Subgroup.G_PLUS),
])
def test_state_families_invariant_under_their_subgroup(family, subgroup):
    s = build_state(StateSpec(family, 2, 5.0)).series
    ok, phases = subgroup_invariance_check(s, subgroup)
    assert ok
    for lam in phases.values():
        assert abs(abs(lam) - 1.0) < 1e-10


def test_phi_states_not_invariant_under_other_subgroups():
    s = build_state(StateSpec(StateFamily.PHI_PLUS, 2, 5.0)).series
    ok, _ = subgroup_invariance_check(s, Subgroup.G_PLUS)
    assert not ok


def test_sweep_characteristics_shape_and_order():
    rows = sweep_characteristics(2, [0.0, 1.0])
    # ce 0..2 and se 1..2 -> five rows per l value
    assert len(rows) == 10
    assert rows[0][2] == 0.0 and rows[-1][2] == 1.0
    free = sorted(r[3] for r in rows[:5])
    np.testing.assert_allclose(free, [0, 1, 1, 4, 4], atol=1e-12)


def test_sweep_validates_grid():
    with pytest.raises(DomainError):
        sweep_characteristics(2, [])
    with pytest.raises(DomainError):
        sweep_characteristics(2, [1.0, 0.5])
    with pytest.raises(DomainError):
        sweep_characteristics(2, [-1.0, 0.5])


def test_pair_gap_measures():
    gap_abs = pair_gap(1, PairingKind.ROTOR, 0.5, GapMeasure.ABSOLUTE)
    gap_rel = pair_gap(1, PairingKind.ROTOR, 0.5, GapMeasure.RELATIVE)
    assert gap_abs > 0
    mean = 0.5 * (
        pair_gap(1, PairingKind.ROTOR, 0.5, GapMeasure.ABSOLUTE) / gap_rel)
    assert mean > 0  # consistency: relative = absolute / |mean|


def test_rotor_boundary_immediate_when_gap_large():
    b = find_boundary(1, PairingKind.ROTOR, 1e-9)
    assert b.l_c == 0.0


def test_rotor_boundary_grows_with_epsilon():
    small = find_boundary(3, PairingKind.ROTOR, 1e-3).l_c
    large = find_boundary(3, PairingKind.ROTOR, 1e-2).l_c
    assert 0 < small < large


def test_well_boundary_monotone_in_pair_index():
    values = [find_boundary(k, PairingKind.WELL, 1e-2).l_c for k in (0, 2, 3)]
    assert values[0] < values[1] < values[2]


def test_boundary_not_found():
    with pytest.raises(BoundaryNotFoundError):
        find_boundary(1, PairingKind.WELL, 1e-2, ceiling=0.5)


def test_classify_region_progression():
    # level 2: degenerate rotor pair at tiny l, isolated in between,
    # degenerate well pair deep in the well
    eps_r, eps_w = 4.989e-3, 9.95e-3
    assert classify_region(2, 0.01, eps_r, eps_w) is Subgroup.G_MINUS
    assert classify_region(2, 3.0, eps_r, eps_w) is Subgroup.G_ZERO
    assert classify_region(2, 30.0, eps_r, eps_w) is Subgroup.G_PLUS


def test_calibrate_epsilon_rotor():
    from qpendulum.symmetry import calibrate_epsilon

    res = calibrate_epsilon({2: 0.2, 3: 1.14, 4: 3.17}, PairingKind.ROTOR)
    # recovers the documented ~0.5% relative threshold with small residuals
    assert res.epsilon == pytest.approx(4.99e-3, rel=0.05)
    assert all(abs(r) < 0.01 for r in res.residuals.values())
    assert res.per_row_epsilon == {}


def test_calibrate_epsilon_well_flags_unfittable_row():
    from qpendulum.symmetry import calibrate_epsilon

    from qpendulum import reference as ref

    res = calibrate_epsilon(ref.MERGING_POINTS, PairingKind.WELL)
    # row 2 sits where the pair mean crosses zero; no single relative
    # threshold fits it, so it alone gets a per-row absolute fallback
    assert res.epsilon == pytest.approx(1.0e-2, rel=0.05)
    assert set(res.per_row_epsilon) == {2}
    assert all(abs(res.residuals[n]) < 0.1 for n in res.residuals if n != 2)
    eps2 = res.per_row_epsilon[2]
    b = find_boundary(well_pair_for_level(2), PairingKind.WELL, eps2,
                      GapMeasure.ABSOLUTE)
    assert b.l_c == pytest.approx(7.51, abs=0.01)


def test_well_pair_for_level():
    assert well_pair_for_level(1) == 0
    assert well_pair_for_level(8) == 7
    with pytest.raises(DomainError):
        well_pair_for_level(0)
