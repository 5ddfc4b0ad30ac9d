import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from hypothesis.extra import numpy as hnp
from numpy.testing import assert_allclose

from hsverify.backend.operators import LineGrid, assemble, assemble_potential
from hsverify.backend.profiles.constants import derive_constants, validate_params
from hsverify.backend.spectral import (
    classify_eigenvalues, decay_window, decide_verdict, eigen_count_below, eigenfunction,
    eigenvalues_below, fit_decay, kernel_dimension, lowest_eigenvalue, mode_kernels, normalize, rayleigh_quotient,
    sign_changes, solve_mode_spectrum, total_kernel_dimension
)
from hsverify.core.errors import InconclusiveError, ParameterError
from hsverify.core.models import Verdict
from hsverify.core.params import NumericConfig


@pytest.fixture(scope="module")
def reference_A0(reference_constants, reference_grid):
    return assemble(0.0, reference_grid, reference_constants)


@pytest.fixture(scope="module")
def reference_spectrum(reference_constants, reference_grid, default_config):
    spectrum, _ = solve_mode_spectrum(reference_constants, reference_grid, default_config)
    return spectrum


# --- Sturm counts ---


def test_count_below_reference(reference_A0):
    assert eigen_count_below(reference_A0, -1.0) == 0
    assert eigen_count_below(reference_A0, -0.5) == 1
    assert eigen_count_below(reference_A0, 0.1) == 2


st_size = st.integers(3, 40)
st_diag = hnp.arrays(np.float64, st_size, elements=st.floats(-5.0, 5.0))


@settings(max_examples=50)
@given(potential=st_diag, x=st.floats(-3.0, 10.0))
def test_count_below_matches_dense_solver(potential, x):
    grid = LineGrid(h=0.5, M=(potential.size - 1) // 2)
    q = potential[:grid.N]
    A = assemble_potential(q, grid)
    dense = (np.diag(A.diag) + np.diag(np.full(grid.N - 1, A.offdiag), 1)
             + np.diag(np.full(grid.N - 1, A.offdiag), -1))
    eigs = np.linalg.eigvalsh(dense)
    # skip draws with an eigenvalue on top of x
    assume(np.min(np.abs(eigs - x)) >= 1e-9)
    assert eigen_count_below(A, x) == int(np.sum(eigs < x))


# --- eigenvalues ---


def test_reference_levels(reference_spectrum):
    assert reference_spectrum.essential_threshold == pytest.approx(0.25)
    assert_allclose(reference_spectrum.eigenvalues, [-0.75, 0.0], atol=1e-4)


def test_boundary_levels(boundary_params):
    c = derive_constants(boundary_params)
    grid = LineGrid.from_half_width(40.0, 0.005)
    eigs = eigenvalues_below(assemble(0.0, grid, c), c.epsilon ** 2 - 1e-6)
    assert_allclose(eigs, [-2.0, 0.0], atol=1e-4)


def test_lowest_eigenvalue_matches_bisection(reference_A0, reference_spectrum):
    assert lowest_eigenvalue(reference_A0) == pytest.approx(reference_spectrum.eigenvalues[0], abs=1e-9)


def test_eigenvalues_below_nothing(reference_A0):
    assert eigenvalues_below(reference_A0, -5.0) == []
    with pytest.raises(ParameterError):
        eigenvalues_below(reference_A0, 0.0, abs_tol=0.0)


def test_shifted_spectrum(reference_spectrum):
    shifted = reference_spectrum.shifted(2.0)
    assert shifted.mu == 2.0
    assert_allclose(shifted.eigenvalues, [1.25, 2.0], atol=1e-4)
    assert shifted.essential_threshold == pytest.approx(2.25)


# --- eigenfunctions ---


def test_eigenfunctions_are_normalized(reference_spectrum, reference_grid, reference_A0):
    h = reference_grid.h
    for e, v in zip(reference_spectrum.eigenvalues, reference_spectrum.eigenfunctions):
        assert h * np.dot(v, v) == pytest.approx(1.0)
        assert rayleigh_quotient(v, reference_A0) == pytest.approx(e, abs=1e-8)


def test_ground_state_has_no_node_and_zero_mode_one(reference_spectrum, reference_grid):
    ground, zero = reference_spectrum.eigenfunctions
    assert sign_changes(ground) == 0
    assert sign_changes(zero) == 1
    # even ground state, odd zero mode
    assert_allclose(ground, reference_grid.mirror(ground), atol=1e-6)
    assert_allclose(zero, -reference_grid.mirror(zero), atol=1e-6)


def test_eigenfunction_does_not_converge_far_from_spectrum(reference_A0):
    with pytest.raises(InconclusiveError):
        eigenfunction(reference_A0, 0.1, max_iter=3)


def test_normalize_sign_convention():
    v = normalize(np.array([0.0, -2.0, 1.0]), 1.0)
    assert v[1] > 0.0
    assert np.dot(v, v) == pytest.approx(1.0)
    with pytest.raises(ParameterError):
        normalize(np.zeros(3), 1.0)


def test_sign_changes_ignores_noise():
    v = np.array([1.0, 0.5, 1e-12, -1e-12, 0.3, -0.2, -1.0])
    assert sign_changes(v) == 1


# --- kernel accounting ---


def test_classify_eigenvalues():
    assert classify_eigenvalues([-0.75, 1e-6], 5e-5, 1e-2) == (1, 0.75, False)
    dim, margin, inconclusive = classify_eigenvalues([-0.75, 3e-3], 5e-5, 1e-2)
    assert dim == 0 and inconclusive and margin == pytest.approx(3e-3)
    with pytest.raises(ParameterError):
        classify_eigenvalues([0.0], 1e-2, 1e-3)


def test_classify_eigenvalues_no_levels():
    dim, margin, inconclusive = classify_eigenvalues([], 5e-5, 1e-2)
    assert dim == 0 and margin == float("inf") and not inconclusive


def test_kernel_dimension_per_mode(reference_A0, reference_constants):
    eps = reference_constants.epsilon
    assert kernel_dimension(reference_A0, 5e-5, 1e-2, epsilon=eps) == (1, pytest.approx(0.75, abs=1e-4))
    dim, margin = kernel_dimension(reference_A0.shifted(2.0), 5e-5, 1e-2, epsilon=eps)
    assert dim == 0
    assert margin == pytest.approx(1.25, abs=1e-4)


def test_kernel_dimension_gray_band(reference_A0, reference_constants):
    # A_0 + 3e-3 puts the zero mode inside [zero_tol, separation)
    with pytest.raises(InconclusiveError):
        kernel_dimension(reference_A0.shifted(3e-3), 5e-5, 1e-2,
                         epsilon=reference_constants.epsilon)


def test_mode_kernels_rows(reference_params, reference_spectrum, default_config):
    rows = mode_kernels(reference_params, reference_spectrum, default_config)
    # mu_2 = 6 lies above -lambda_min(A_0) + separation
    assert [r.mode.k for r in rows] == [0, 1]
    assert [r.kernel_dim for r in rows] == [1, 0]
    assert rows[0].oracle_lowest == pytest.approx(-0.75)
    assert rows[1].oracle_lowest == pytest.approx(1.25)


def test_decide_verdict(reference_params, boundary_params, reference_spectrum, default_config):
    rows = mode_kernels(reference_params, reference_spectrum, default_config)
    assert decide_verdict(reference_params, rows, 1e-2) == (1, Verdict.VERIFIED_DIM_1)
    # same rows read as a boundary triple: n+1 = 4 expected, 1 found
    assert decide_verdict(boundary_params, rows, 1e-2) == (1, Verdict.VIOLATION)


def test_reference_kernel_report(reference_kernel):
    rep = reference_kernel
    assert rep.verdict == Verdict.VERIFIED_DIM_1
    assert rep.total_dim == 1
    assert rep.per_mode[0].margin >= 0.7
    assert rep.lowest_eigenvalue == pytest.approx(-0.75, abs=1e-4)
    assert rep.oracle_lowest == pytest.approx(-0.75)
    assert rep.theorem_margin_oracle == pytest.approx(1.25)
    assert rep.theorem_margin_numeric == pytest.approx(1.25, abs=1e-4)
    assert rep.grid.T == pytest.approx(40.0)
    assert rep.case.value == "CaseI"
    assert rep.oracle_check.passed
    assert rep.zero_mode is not None and rep.zero_mode.passed
    assert rep.zero_mode.decay.slope == pytest.approx(-0.5, rel=0.02)
    assert rep.zero_mode.decay.window == pytest.approx([20.0, 30.0], abs=0.01)
    assert rep.zero_mode.ground_l2_error < 1e-3
    assert rep.notes == []


def test_boundary_kernel_report(boundary_kernel):
    rep = boundary_kernel
    assert rep.verdict == Verdict.BOUNDARY_DIM_N_PLUS_1
    assert rep.total_dim == 4
    assert [r.kernel_dim for r in rep.per_mode] == [1, 1]
    assert rep.per_mode[1].mode.multiplicity == 3
    assert rep.theorem_margin_oracle == pytest.approx(0.0, abs=1e-12)


def test_total_kernel_dimension_node_cap(reference_params):
    with pytest.raises(InconclusiveError):
        total_kernel_dimension(reference_params, NumericConfig(max_nodes=100))


def test_fit_decay_recovers_rate():
    t = np.linspace(0.0, 20.0, 2001)
    fit = fit_decay(t, 3.0 * np.exp(-0.7 * t), 5.0, 15.0)
    assert fit.slope == pytest.approx(-0.7)
    assert fit.correlation == pytest.approx(-1.0)
    with pytest.raises(InconclusiveError):
        fit_decay(t, np.exp(-t), 30.0, 40.0)


def test_decay_window_follows_resolved_tail():
    t = np.linspace(-40.0, 40.0, 16001)
    # e^{-2t} falls below 1e-7 at t = ln(1e7)/2 = 8.06
    t_lo, t_hi = decay_window(t, np.exp(-2.0 * np.abs(t)), 40.0)
    assert t_hi == pytest.approx(8.06, abs=0.01)
    assert t_lo == pytest.approx(0.5 * t_hi)
    assert decay_window(t, np.exp(-0.1 * np.abs(t)), 40.0) == (20.0, 30.0)


@pytest.mark.parametrize("n, s, gamma, mode", [
    (5, 1.0, 0.0, "theorem"),
    (6, 0.5, 0.0, "theorem"),
    (6, 0.0, 0.0, "boundary"),
])
def test_zero_mode_fast_decay(n, s, gamma, mode, default_config):
    rep = total_kernel_dimension(validate_params(n, s, gamma, mode=mode), default_config)
    assert rep.verdict in (Verdict.VERIFIED_DIM_1, Verdict.BOUNDARY_DIM_N_PLUS_1)
    zm = rep.zero_mode
    assert zm is not None and zm.passed
    # the tail is lost in noise long before T/2
    assert zm.decay.window[1] < 0.5 * rep.grid.T
    assert zm.decay.reference_slope == pytest.approx(-rep.epsilon, rel=0.02)
    assert zm.decay.slope == pytest.approx(zm.decay.reference_slope, abs=0.02 * rep.epsilon)
    assert rep.notes == []
