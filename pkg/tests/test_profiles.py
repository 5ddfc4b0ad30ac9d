import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from hsverify.backend.profiles.constants import derive_constants, validate_params
from hsverify.backend.profiles.functions import (
    eval_U, eval_U_hat, eval_U_prime, eval_V, eval_V_composition, eval_V_derivatives,
    eval_V_explicit, eval_Z_hat, log_u_hat
)
from hsverify.core.errors import ParameterError

from conftest import theorem_triples


def test_u_hat_peak(reference_constants):
    c = reference_constants
    assert eval_U_hat(0.0, c) == pytest.approx(c.u_hat_zero)
    assert eval_U_hat(0.0, c, order=1) == 0.0


@given(p=theorem_triples(), t=st.floats(-15.0, 15.0))
def test_u_hat_is_the_hat_transform_of_u(p, t):
    c = derive_constants(p)
    r = math.exp(-t)
    hat = math.exp(-(p.n - 2) / 2.0 * t) * eval_U(r, c)
    assert eval_U_hat(t, c) == pytest.approx(hat, rel=1e-10)


@given(p=theorem_triples())
def test_u_hat_is_even_bit_for_bit(p):
    c = derive_constants(p)
    t = np.linspace(0.0, 50.0, 501)
    assert np.array_equal(eval_U_hat(t, c), eval_U_hat(-t, c))


def test_u_hat_tail_does_not_overflow(reference_constants):
    values = eval_U_hat(np.array([-1e4, 1e4]), reference_constants)
    assert np.all(np.isfinite(values))
    assert np.all(values >= 0.0)
    assert np.isfinite(log_u_hat(1e6, reference_constants))


@pytest.mark.parametrize("order", [1, 2])
def test_u_hat_derivatives_match_differences(reference_constants, order):
    c = reference_constants
    t = np.linspace(-8.0, 8.0, 81)
    h = 1e-4
    lower = np.asarray(eval_U_hat(t, c, order=order - 1))
    fd = (np.asarray(eval_U_hat(t + h, c, order=order - 1))
          - np.asarray(eval_U_hat(t - h, c, order=order - 1))) / (2.0 * h)
    assert lower.shape == fd.shape
    assert_allclose(eval_U_hat(t, c, order=order), fd, atol=1e-7)


def test_u_hat_rejects_third_order(reference_constants):
    with pytest.raises(ParameterError):
        eval_U_hat(0.0, reference_constants, order=3)


def test_u_needs_positive_radius(reference_constants):
    with pytest.raises(ParameterError):
        eval_U(np.array([0.5, 0.0]), reference_constants)
    with pytest.raises(ParameterError):
        eval_U_prime(-1.0, reference_constants)


@given(p=theorem_triples(), r=st.floats(0.05, 20.0))
def test_u_prime_matches_difference(p, r):
    c = derive_constants(p)
    h = 1e-6 * r
    fd = (eval_U(r + h, c) - eval_U(r - h, c)) / (2.0 * h)
    assert eval_U_prime(r, c) == pytest.approx(fd, rel=1e-5, abs=1e-10)


def test_z_hat_is_minus_u_hat_prime(reference_constants):
    t = np.linspace(-5.0, 5.0, 11)
    assert_allclose(eval_Z_hat(t, reference_constants),
                    -np.asarray(eval_U_hat(t, reference_constants, order=1)))


@settings(max_examples=50)
@given(p=theorem_triples(max_n=6))
def test_v_forms_agree(p):
    c = derive_constants(p)
    t = np.linspace(-6.0, 6.0, 61)
    stable = np.asarray(eval_V(t, c))
    assert_allclose(eval_V_explicit(t, c), stable, rtol=1e-9)
    assert_allclose(eval_V_composition(t, c), stable, rtol=1e-9)
    defining = np.exp(t) * (np.asarray(eval_U_hat(t, c, order=1))
                            + c.half_dim * np.asarray(eval_U_hat(t, c)))
    assert_allclose(defining, stable, rtol=1e-8)


@given(p=theorem_triples())
def test_v_is_positive(p):
    c = derive_constants(p)
    t = np.linspace(-60.0, 60.0, 241)
    assert np.all(np.asarray(eval_V(t, c)) > 0.0)


@pytest.mark.parametrize("order", [1, 2])
def test_v_derivatives_match_differences(order):
    c = derive_constants(validate_params(5, 0.5, 1.0))
    t = np.linspace(-6.0, 6.0, 61)
    h = 1e-4
    fd = (np.asarray(eval_V_derivatives(t + h, c, order=order - 1))
          - np.asarray(eval_V_derivatives(t - h, c, order=order - 1))) / (2.0 * h)
    assert_allclose(eval_V_derivatives(t, c, order=order), fd, rtol=1e-6, atol=1e-9)


def test_scalar_in_scalar_out(reference_constants):
    assert isinstance(eval_U_hat(1.0, reference_constants), float)
    assert isinstance(eval_V(1.0, reference_constants), float)
    assert eval_V(np.array([1.0]), reference_constants).shape == (1,)
