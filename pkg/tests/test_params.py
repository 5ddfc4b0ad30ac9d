import math

import pytest
from hypothesis import given, strategies as st
from pydantic import ValidationError

from hsverify.backend.profiles.constants import (
    classify_case, derive_constants, on_case_boundary, validate_params
)
from hsverify.backend.profiles.sphere import harmonic_dimension, sphere_modes
from hsverify.core.errors import ParameterError
from hsverify.core.params import CaseTag, NumericConfig, RunSettings, SweepSpec

from conftest import theorem_triples


@pytest.mark.parametrize("n, s, gamma", [
    (2, 1.0, 0.0),        # n < 3
    (3, 2.0, 0.0),        # s outside [0, 2)
    (3, -0.1, 0.1),
    (3, 1.0, 0.25),       # gamma at the Hardy limit (n-2)^2/4
    (5, 1.0, -0.5),       # gamma < 0
    (4, 0.0, 0.0),        # gamma = s = 0 needs boundary mode
])
def test_validate_params_rejects_out_of_range(n, s, gamma):
    with pytest.raises(ParameterError):
        validate_params(n, s, gamma)


def test_boundary_mode_admits_gamma_s_zero():
    p = validate_params(3, 0.0, 0.0, mode="boundary")
    assert p.is_boundary
    assert p.mode == "boundary"


def test_boundary_mode_still_checks_ranges():
    with pytest.raises(ParameterError):
        validate_params(3, 0.0, 0.3, mode="boundary")


def test_parameter_error_is_a_value_error():
    with pytest.raises(ValueError):
        validate_params(3, 2.5, 0.0)


def test_reference_constants(reference_constants):
    c = reference_constants
    assert c.epsilon == pytest.approx(0.5)
    assert c.lam == pytest.approx(2.0)
    assert c.beta == pytest.approx(1.0)
    assert c.two_star_s == pytest.approx(4.0)
    assert c.ell == pytest.approx(2.0)
    assert c.u_hat_zero == pytest.approx(0.5)
    assert c.alpha_minus == pytest.approx(0.0)
    assert c.alpha_plus == pytest.approx(1.0)


def test_constants_at_n4_boundary():
    c = derive_constants(validate_params(4, 0.0, 0.0, mode="boundary"))
    assert c.epsilon == pytest.approx(1.0)
    assert c.lam == pytest.approx(8.0)
    assert c.two_star_s == pytest.approx(4.0)


@given(p=theorem_triples())
def test_alpha_roots(p):
    c = derive_constants(p)
    assert c.alpha_minus * c.alpha_plus == pytest.approx(p.gamma, abs=1e-12)
    assert c.alpha_minus + c.alpha_plus == pytest.approx(p.n - 2)
    assert c.alpha_minus <= c.alpha_plus


@given(p=theorem_triples())
def test_epsilon_and_lambda(p):
    c = derive_constants(p)
    assert c.epsilon > 0.0
    assert c.epsilon ** 2 == pytest.approx((p.n - 2) ** 2 / 4.0 - p.gamma, abs=1e-12)
    assert c.lam == pytest.approx(c.two_star_s * 2.0 * c.epsilon ** 2)
    assert c.scale == pytest.approx((2.0 - p.s) / (p.n - 2) * c.epsilon)


@pytest.mark.parametrize("n, s, gamma, expected", [
    (6, 1.0, 0.0, CaseTag.CASE_I),
    (5, 0.5, 2.0, CaseTag.CASE_IIA),
    (3, 1.6, 0.0, CaseTag.CASE_IIB),
    (3, 1.5, 0.0, CaseTag.CASE_IIB),
    (6, 0.5, 1.0, CaseTag.CASE_I),
])
def test_classify_case(n, s, gamma, expected):
    assert classify_case(validate_params(n, s, gamma)) == expected


def test_case_boundary_at_epsilon_one():
    # n = 6: (n-2)^2/4 = 4, gamma = 3 gives eps = 1
    assert on_case_boundary(validate_params(6, 0.5, 3.0))
    assert not on_case_boundary(validate_params(6, 0.5, 2.0))
    assert not on_case_boundary(validate_params(3, 1.0, 0.0))


def test_sphere_modes_n3():
    modes = sphere_modes(3, 2)
    assert [(m.mu, m.multiplicity) for m in modes] == [(0.0, 1), (2.0, 3), (6.0, 5)]


@given(n=st.integers(3, 12))
def test_first_harmonic_levels(n):
    assert harmonic_dimension(n, 0) == 1
    assert harmonic_dimension(n, 1) == n
    modes = sphere_modes(n, 3)
    assert modes[1].mu == n - 1
    assert all(a.mu < b.mu for a, b in zip(modes, modes[1:]))


def test_harmonic_dimension_n4():
    # dimension (k+1)^2 on S^3
    assert [harmonic_dimension(4, k) for k in range(5)] == [1, 4, 9, 16, 25]


def test_sphere_modes_rejects_bad_input():
    with pytest.raises(ParameterError):
        sphere_modes(2, 3)
    with pytest.raises(ParameterError):
        sphere_modes(3, 0)


def test_numeric_config_band_order():
    with pytest.raises(ValidationError):
        NumericConfig(zero_tol=1e-2, separation=1e-3)
    with pytest.raises(ValidationError):
        NumericConfig(h_max=0.0)
    with pytest.raises(ValidationError):
        NumericConfig(unknown_knob=1)


def test_default_sweep_triples():
    spec = SweepSpec()
    triples = spec.theorem_triples()
    # gamma = s = 0 dropped once per n
    assert len(triples) == 4 * 4 * 4 - 4
    assert [t.sort_key for t in triples] == sorted(t.sort_key for t in triples)
    assert all(t.gamma + t.s > 0 for t in triples)


def test_sweep_boundary_triples():
    spec = SweepSpec(n_values=[4, 3], include_boundary=True)
    boundary = spec.boundary_triples()
    assert [(b.n, b.mode) for b in boundary] == [(3, "boundary"), (4, "boundary")]
    assert spec.all_triples()[-2:] == boundary


def test_sweep_rejects_fraction_one():
    with pytest.raises(ValidationError):
        SweepSpec(gamma_fractions=[0.5, 1.0])


def test_sweep_invalid_s_raises_parameter_error():
    with pytest.raises(ParameterError):
        SweepSpec(s_values=[2.0]).theorem_triples()


def test_run_settings_problem():
    settings = RunSettings(n=3, s=1.0, gamma=0.0)
    p = settings.problem()
    assert (p.n, p.s, p.gamma, p.mode) == (3, 1.0, 0.0, "theorem")

    with pytest.raises(ParameterError, match="--gamma"):
        RunSettings(n=3, s=1.0).problem()
    with pytest.raises(ParameterError):
        RunSettings(n=3, s=0.0, gamma=0.0).problem()
    assert RunSettings(n=3, s=0.0, gamma=0.0, boundary=True).problem().is_boundary


def test_problem_params_label_and_sort_key():
    p = validate_params(4, 0.5, 0.25)
    assert p.sort_key == (4, 0.5, 0.25)
    assert "n=4" in p.label()
    assert math.isclose(p.gamma, 0.25)
