import math

import numpy as np
import pytest
from scipy.special import eval_legendre

from src.interferometry.legendre import (
    legendre,
    legendre_derivative,
    legendre_offset_table,
    legendre_table,
)
from src.utils.exceptions import DomainError


def test_low_orders():
    for x in (-1.0, -0.3, 0.0, 0.6, 1.0):
        assert legendre(0, x) == 1.0
        assert legendre(1, x) == x
    assert math.isclose(legendre(2, 0.5), -0.125, abs_tol=1e-15)
    assert math.isclose(legendre(3, 0.5), -0.4375, abs_tol=1e-15)


def test_endpoint_values():
    for n in range(0, 30):
        assert math.isclose(legendre(n, 1.0), 1.0, abs_tol=1e-13)
        assert math.isclose(legendre(n, -1.0), (-1.0) ** n, abs_tol=1e-13)


def test_table_matches_scipy():
    x = np.linspace(-1.0, 1.0, 201)
    table = legendre_table(40, x)
    assert table.shape == (41, 201)
    for n in range(41):
        np.testing.assert_allclose(table[n], eval_legendre(n, x), rtol=0, atol=1e-12)


def test_scalar_matches_table():
    x = np.array([-0.95, -0.2, 0.33, 0.999])
    table = legendre_table(12, x)
    for n in range(13):
        for i, xi in enumerate(x):
            assert math.isclose(legendre(n, float(xi)), table[n, i], abs_tol=1e-14)


def test_argument_clamping():
    assert legendre(5, 1.0 + 1e-13) == 1.0
    assert legendre(4, -1.0 - 1e-13) == 1.0
    with pytest.raises(DomainError):
        legendre(3, 1.01)
    with pytest.raises(DomainError):
        legendre_table(3, np.array([0.0, -1.5]))
    with pytest.raises(DomainError):
        legendre(2, math.nan)
    with pytest.raises(DomainError):
        legendre(-1, 0.5)


def test_derivative_low_orders():
    assert legendre_derivative(0, 0.4) == 0.0
    assert math.isclose(legendre_derivative(1, 0.4), 1.0, rel_tol=1e-14)
    assert math.isclose(legendre_derivative(2, 0.3), 0.9, rel_tol=1e-13)


@pytest.mark.parametrize("n", range(1, 13))
def test_derivative_endpoint_limits(n):
    assert legendre_derivative(n, 1.0) == n * (n + 1) / 2
    assert legendre_derivative(n, -1.0) == (-1) ** (n + 1) * n * (n + 1) / 2


@pytest.mark.parametrize("n", range(1, 13))
def test_derivative_against_finite_difference(n):
    h = 1e-6
    for x in np.linspace(-0.9, 0.9, 19):
        fd = (legendre(n, x + h) - legendre(n, x - h)) / (2 * h)
        assert abs(fd - legendre_derivative(n, float(x))) < 1e-6


def test_offset_table_matches_direct_recurrence():
    y = np.linspace(0.0, 1.0, 101)
    values, derivs, one_minus = legendre_offset_table(60, y)
    direct = legendre_table(60, 1.0 - y)
    np.testing.assert_allclose(values, direct, rtol=0, atol=1e-11)
    np.testing.assert_allclose(one_minus, 1.0 - direct, rtol=0, atol=1e-11)
    for n in (1, 2, 7, 25):
        for yi, dpi in zip(y[5::10], derivs[n, 5::10]):
            assert math.isclose(dpi, legendre_derivative(n, 1.0 - float(yi)), rel_tol=1e-9, abs_tol=1e-9)


def test_offset_table_at_peak():
    values, derivs, one_minus = legendre_offset_table(30, np.array([0.0]))
    n = np.arange(31)
    np.testing.assert_array_equal(values[:, 0], np.ones(31))
    np.testing.assert_array_equal(one_minus[:, 0], np.zeros(31))
    np.testing.assert_allclose(derivs[:, 0], n * (n + 1) / 2, rtol=1e-14, atol=0)


def test_offset_table_keeps_small_deficits():
    y = 1e-12
    _, _, one_minus = legendre_offset_table(20, np.array([y]))
    n = np.arange(21)
    np.testing.assert_allclose(one_minus[:, 0], y * n * (n + 1) / 2, rtol=1e-6, atol=0)


def test_offset_table_rejects_out_of_range():
    with pytest.raises(DomainError):
        legendre_offset_table(4, np.array([-0.1]))
    with pytest.raises(DomainError):
        legendre_offset_table(4, np.array([1.2]))
