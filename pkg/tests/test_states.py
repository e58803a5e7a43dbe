import dataclasses
import math

import numpy as np
import pytest

from src.states import (
    TsbParams,
    TwinFockState,
    c00,
    c11,
    factorial_moment,
    mean_photon_number,
    mean_photon_number_closed_form,
    select_cutoff,
    squeezed_number_coefficients,
    squeezed_vacuum_coefficients,
    tsb_coefficients,
)
from src.utils.exceptions import DomainError, TruncationOverflow


def test_c00_values():
    assert c00(0.0) == 0.0
    assert math.isclose(c00(1.0), math.tanh(1.0) / math.cosh(1.0), rel_tol=1e-15)
    assert math.isclose(c00(1.0), 0.4935545, abs_tol=1e-6)
    # 峰值之后单调递减并趋于零
    rs = np.linspace(1.0, 20.0, 50)
    values = [c00(r) for r in rs]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] < 1e-7


def test_c11_values():
    assert c11(0.0) == 1.0
    assert abs(c11(math.asinh(1.0))) < 1e-15
    expected = (1.0 - math.sinh(1.0) ** 2) / math.cosh(1.0) ** 3
    assert math.isclose(c11(1.0), expected, rel_tol=1e-15)
    assert math.isclose(c11(1.0), -0.103722, abs_tol=1e-6)


@pytest.mark.parametrize("r, delta", [(-0.1, 0.0), (1.0, -1e-9), (1.0, math.pi / 2 + 1e-9), (math.nan, 0.0)])
def test_tsb_params_rejects_out_of_domain(r, delta):
    with pytest.raises(DomainError):
        TsbParams(r, delta)


def test_squeezed_vacuum_branch():
    state = tsb_coefficients(TsbParams(1.0, 0.0))
    n = np.arange(state.n_max + 1)
    expected = (-math.tanh(1.0)) ** n / math.cosh(1.0)
    np.testing.assert_allclose(state.coeffs, expected, rtol=0, atol=1e-15)
    np.testing.assert_allclose(squeezed_vacuum_coefficients(1.0).coeffs, state.coeffs, rtol=0, atol=1e-14)


def test_unsqueezed_pair_is_single_twin_fock_term():
    state = tsb_coefficients(TsbParams(0.0, math.pi / 2))
    assert state.n_max >= 1
    assert math.isclose(state.coeffs[1], 1.0, abs_tol=1e-15)
    assert abs(state.coeffs[0]) < 1e-15
    assert np.all(np.abs(state.coeffs[2:]) < 1e-15)

    number = squeezed_number_coefficients(0.0)
    assert math.isclose(number.coeffs[1], 1.0, abs_tol=1e-15)


@pytest.mark.parametrize("r", [0.0, 0.3, 0.8813735870195430, 1.0, 1.25, 1.5])
def test_endpoint_consistency(r):
    squeezed_number = squeezed_number_coefficients(r)
    pi_half = tsb_coefficients(TsbParams(r, math.pi / 2))
    assert squeezed_number.n_max == pi_half.n_max
    np.testing.assert_allclose(pi_half.coeffs, squeezed_number.coeffs, rtol=0, atol=1e-14)

    vacuum = squeezed_vacuum_coefficients(r)
    zero = tsb_coefficients(TsbParams(r, 0.0))
    np.testing.assert_allclose(zero.coeffs, vacuum.coeffs, rtol=0, atol=1e-14)


def test_squeezed_number_first_order_matches_c11():
    state = squeezed_number_coefficients(1.0)
    assert math.isclose(state.coeffs[1], c11(1.0), rel_tol=1e-14)
    assert math.isclose(state.coeffs[0], c00(1.0), rel_tol=1e-14)


def test_normalization_grid():
    eps = 1e-12
    for r in np.linspace(0.0, 1.5, 16):
        for delta in np.linspace(0.0, math.pi / 2, 16):
            state = tsb_coefficients(TsbParams(float(r), float(delta)), eps)
            assert abs(state.norm - 1.0) < 10 * eps
            assert state.tail_bound <= eps


def test_cutoff_independent_of_delta():
    n_values = {tsb_coefficients(TsbParams(1.2, d)).n_max for d in np.linspace(0, math.pi / 2, 7)}
    assert len(n_values) == 1


def test_continuity_in_delta():
    h = 1e-6
    for delta in (0.0, 0.3, 1.0, 1.5):
        a = tsb_coefficients(TsbParams(1.0, delta)).coeffs
        b = tsb_coefficients(TsbParams(1.0, delta + h)).coeffs
        assert np.max(np.abs(a - b)) < 1e-4


@pytest.mark.parametrize("r", [0.25, 0.5, 1.0, 1.5])
def test_mean_photon_number_squeezed_number(r):
    state = squeezed_number_coefficients(r)
    expected = 6.0 * math.sinh(r) ** 2 + 2.0
    assert math.isclose(mean_photon_number(state), expected, rel_tol=1e-9)


def test_mean_photon_number_values():
    # 6·sinh²1 + 2 ≈ 10.28659
    assert math.isclose(mean_photon_number(squeezed_number_coefficients(1.0)), 10.28659, abs_tol=1e-5)
    assert math.isclose(mean_photon_number(squeezed_number_coefficients(1.0)), 6.0 * math.sinh(1.0) ** 2 + 2.0, rel_tol=1e-12)
    assert mean_photon_number(tsb_coefficients(TsbParams(0.0, 0.0))) == 0.0
    for r in (0.3, 1.0, 1.4):
        state = tsb_coefficients(TsbParams(r, 0.0))
        assert math.isclose(mean_photon_number(state), 2.0 * math.sinh(r) ** 2, rel_tol=1e-9)


def test_mean_photon_number_closed_form_matches_series():
    for r in (0.5, 0.75, 1.0, 1.5):
        for delta in np.linspace(0.0, math.pi / 2, 9):
            params = TsbParams(r, float(delta))
            numeric = mean_photon_number(tsb_coefficients(params))
            assert math.isclose(numeric, mean_photon_number_closed_form(params), rel_tol=1e-9)


def test_factorial_moment_of_squeezed_vacuum():
    for r in (0.5, 1.0):
        s2 = math.sinh(r) ** 2
        state = squeezed_vacuum_coefficients(r)
        assert math.isclose(factorial_moment(state), 2.0 * s2 * s2 + 2.0 * s2, rel_tol=1e-9)


def test_twin_fock_state_is_immutable():
    state = tsb_coefficients(TsbParams(0.7, 0.4))
    assert not state.coeffs.flags.writeable
    with pytest.raises(ValueError):
        state.coeffs[0] = 0.0
    with pytest.raises(dataclasses.FrozenInstanceError):
        state.n_max = 3


def test_twin_fock_state_rejects_unnormalized():
    with pytest.raises(DomainError):
        TwinFockState(coeffs=np.array([1.0, 0.5]), n_max=1)
    with pytest.raises(DomainError):
        TwinFockState(coeffs=np.array([1.0]), n_max=2)


def test_truncation_overflow_and_bad_eps():
    with pytest.raises(TruncationOverflow):
        tsb_coefficients(TsbParams(20.0, 0.3))
    with pytest.raises(TruncationOverflow):
        select_cutoff(3.0, 1e-12, hard_cap=50)
    with pytest.raises(DomainError):
        tsb_coefficients(TsbParams(1.0, 0.0), eps=0.0)
    with pytest.raises(DomainError):
        tsb_coefficients(TsbParams(1.0, 0.0), eps=1.0)


def test_cutoff_grows_with_squeezing():
    small, _ = select_cutoff(0.5, 1e-12)
    large, _ = select_cutoff(1.5, 1e-12)
    assert small < large <= 4096
