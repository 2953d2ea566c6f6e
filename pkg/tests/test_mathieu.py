import numpy as np
import pytest

from qpendulum.errors import ConvergenceError, DomainError
from qpendulum.mathieu import (
    MathieuClass,
    a_value,
    b_value,
    build_series,
    ce_class,
    ce_series,
    characteristic_value,
    se_class,
    se_series,
    spectral_level,
)
from qpendulum.series import eval_series, inner_product, multiply_by_cos2phi, series_derivative

GRID = np.linspace(0.0, 2.0 * np.pi, 2048, endpoint=False)


def dense_oracle(mathieu_class, n, l, size=96):
    """Independent eigensolve of the same family via a dense matrix."""
    from qpendulum.mathieu import _tridiagonal

    diag, off = _tridiagonal(mathieu_class, l, size)
    m = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    return np.sort(np.linalg.eigvalsh(m))[mathieu_class.eigen_index(n)]


@pytest.mark.parametrize("n", range(0, 9))
def test_free_rotor_values(n):
    if n >= 0:
        assert a_value(n, 0.0) == pytest.approx(n * n, abs=1e-12)
    if n >= 1:
        assert b_value(n, 0.0) == pytest.approx(n * n, abs=1e-12)


@pytest.mark.parametrize("l", [0.7, 3.42, 11.1, 28.0])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 5, 8])
def test_against_dense_oracle(n, l):
    cls = ce_class(n)
    assert characteristic_value(cls, n, l) == pytest.approx(
        dense_oracle(cls, n, l), abs=1e-9)
    if n >= 1:
        cls = se_class(n)
        assert characteristic_value(cls, n, l) == pytest.approx(
            dense_oracle(cls, n, l), abs=1e-9)


def test_second_order_perturbation_small_l():
    # a_0(l) = -l^2/2 + O(l^4) for the ground level
    l = 1e-3
    assert a_value(0, l) == pytest.approx(-l * l / 2.0, abs=1e-10)
    # a_2/b_2 split at second order: a_2 - b_2 ~ l^2 * 5/12 - (-1/12) ... just
    # check the degenerate first-order split of n=1: a_1 - b_1 = 2l + O(l^2)
    assert a_value(1, l) - b_value(1, l) == pytest.approx(2 * l, rel=1e-3)


def test_deep_well_asymptotics():
    # For l >> n^2 levels approach the harmonic ladder of one well:
    # E ~ -2l + 4*sqrt(l)*(m + 1/2) with m = 0 for the lowest pair
    l = 400.0
    e0 = a_value(0, l)
    assert e0 == pytest.approx(-2 * l + 4 * np.sqrt(l) * 0.5, rel=0.02)
    # lowest tunneling doublet nearly degenerate
    assert abs(a_value(0, l) - b_value(1, l)) < 1e-6


@pytest.mark.parametrize("n,l", [(0, 0.5), (1, 3.42), (2, 11.1), (5, 50.84)])
def test_operator_residual(n, l):
    """-psi'' + 2 l cos(2 phi) psi = E psi checked pointwise."""
    for series_fn in (ce_series,) + ((se_series,) if n >= 1 else ()):
        s = series_fn(n, l)
        e = (a_value if series_fn is ce_series else b_value)(n, l)
        lhs = (eval_series(series_derivative(series_derivative(s)), GRID) * -1.0
               + 2.0 * l * eval_series(multiply_by_cos2phi(s), GRID))
        np.testing.assert_allclose(lhs, e * eval_series(s, GRID), atol=1e-8)


def test_orthonormality_within_class():
    l = 11.1
    for cls, orders in ((MathieuClass.CE_EVEN, [0, 2, 4, 6]),
                        (MathieuClass.SE_ODD, [1, 3, 5])):
        series = [build_series(spectral_level(cls, n, l)) for n in orders]
        for i, si in enumerate(series):
            for j, sj in enumerate(series):
                assert inner_product(si, sj) == pytest.approx(
                    1.0 if i == j else 0.0, abs=1e-10)


def test_ce_se_cross_orthogonality():
    l = 3.42
    assert inner_product(ce_series(1, l), se_series(1, l)) == pytest.approx(
        0.0, abs=1e-12)


def test_truncation_stability():
    for n, l in ((2, 11.1), (8, 50.84)):
        v1 = a_value(n, l, cap=256)
        v2 = a_value(n, l, cap=512)
        assert abs(v1 - v2) < 1e-10


def test_sign_convention():
    # the order-matching harmonic carries positive weight
    for n, l in ((0, 5.0), (3, 10.0)):
        s = ce_series(n, l)
        assert s.cos_coeff(n).real > 0
    assert se_series(2, 5.0).sin_coeff(2).real > 0


def test_order_validation():
    with pytest.raises(DomainError):
        characteristic_value(MathieuClass.CE_EVEN, 3, 1.0)
    with pytest.raises(DomainError):
        characteristic_value(MathieuClass.SE_EVEN, 0, 1.0)
    with pytest.raises(DomainError):
        a_value(2, -1.0)
    with pytest.raises(DomainError):
        se_class(0)


def test_convergence_error_reports_iterates():
    with pytest.raises(ConvergenceError) as err:
        characteristic_value(MathieuClass.CE_EVEN, 0, 1e5, cap=48)
    assert err.value.last_iterates is not None
