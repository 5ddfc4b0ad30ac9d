import numpy as np
import pytest
from hypothesis import given
from numpy.testing import assert_allclose

from hsverify.backend.operators import (
    LineGrid, assemble, assemble_potential, build_grid, default_half_width,
    potential_positivity_check, potential_q, well_profile
)
from hsverify.backend.profiles.constants import derive_constants, validate_params
from hsverify.core.errors import InconclusiveError, ParameterError
from hsverify.core.params import NumericConfig

from conftest import theorem_triples


def test_reference_potential_at_centre(reference_constants):
    assert potential_q(0.0, 0.0, reference_constants) == pytest.approx(-1.25)
    assert potential_q(2.0, 0.0, reference_constants) == pytest.approx(0.75)


def test_potential_tends_to_eps_squared(reference_constants):
    q = potential_q(0.0, np.array([-80.0, 80.0]), reference_constants)
    assert_allclose(q, 0.25, atol=1e-12)


@given(p=theorem_triples())
def test_well_profile_is_sech_squared(p):
    c = derive_constants(p)
    t = np.linspace(-10.0, 10.0, 41)
    expected = 0.25 / np.cosh(c.scale * t) ** 2
    assert_allclose(well_profile(t, c), expected, rtol=1e-10)


def test_positivity_check_n3_s_three_halves():
    c = derive_constants(validate_params(3, 1.5, 0.0))
    ok, min_value = potential_positivity_check(2.0, c)
    assert ok
    assert min_value == pytest.approx(1.5)


def test_positivity_check_fails_for_mu0(reference_constants):
    ok, min_value = potential_positivity_check(0.0, reference_constants)
    assert not ok
    assert min_value == pytest.approx(-1.25)


def test_default_half_width_floor(reference_constants):
    assert default_half_width(reference_constants, 5e-5) == pytest.approx(40.0)


def test_default_half_width_small_epsilon():
    # eps = 0.05: the 10/eps term dominates
    c = derive_constants(validate_params(3, 0.5, 0.25 - 0.05 ** 2))
    assert c.epsilon == pytest.approx(0.05)
    assert default_half_width(c, 5e-5) == pytest.approx(200.0)


def test_line_grid_is_symmetric():
    grid = LineGrid.from_half_width(40.0, 0.005)
    t = grid.nodes
    assert grid.N == t.size == 2 * grid.M + 1
    assert grid.T == pytest.approx(40.0)
    assert grid.h <= 0.005
    assert t[grid.center] == 0.0
    assert np.array_equal(t, -t[::-1])
    assert np.array_equal(grid.mirror(t), -t)


def test_line_grid_stretch_keeps_spacing():
    grid = LineGrid.from_half_width(10.0, 0.01)
    far = grid.stretched(1.5)
    assert far.h == grid.h
    assert far.T == pytest.approx(15.0)


def test_line_grid_rejects_bad_sizes():
    with pytest.raises(ParameterError):
        LineGrid.from_half_width(0.0, 0.01)
    with pytest.raises(ParameterError):
        LineGrid.from_half_width(10.0, -1.0)


def test_build_grid_defaults(reference_grid):
    assert reference_grid.T == pytest.approx(40.0)
    assert reference_grid.h <= 0.005


def test_build_grid_refines_for_tight_zero_band(reference_constants):
    config = NumericConfig(zero_tol=5e-6, separation=1e-2)
    grid = build_grid(reference_constants, config.zero_tol, config)
    assert grid.h <= 0.005 * np.sqrt(0.1) + 1e-12


def test_build_grid_respects_explicit_T(reference_constants):
    config = NumericConfig(T=25.0, h_max=0.01)
    grid = build_grid(reference_constants, config.zero_tol, config)
    assert grid.T == pytest.approx(25.0)


def test_build_grid_node_cap(reference_constants):
    config = NumericConfig(max_nodes=1000)
    with pytest.raises(InconclusiveError, match="inconclusive at this precision"):
        build_grid(reference_constants, config.zero_tol, config)


def test_operator_matches_dense_stencil(reference_constants):
    grid = LineGrid.from_half_width(2.0, 0.25)
    A = assemble(0.0, grid, reference_constants)
    q = np.asarray(potential_q(0.0, grid.nodes, reference_constants))
    dense = (np.diag(2.0 / grid.h ** 2 + q)
             - np.diag(np.full(grid.N - 1, 1.0 / grid.h ** 2), 1)
             - np.diag(np.full(grid.N - 1, 1.0 / grid.h ** 2), -1))
    v = np.linspace(-1.0, 2.0, grid.N)
    assert_allclose(A.matvec(v), dense @ v, atol=1e-10)
    assert_allclose(A.potential, q, atol=1e-10)


def test_mode_operators_differ_by_mu(reference_constants):
    grid = LineGrid.from_half_width(5.0, 0.05)
    A0 = assemble(0.0, grid, reference_constants)
    A2 = assemble(2.0, grid, reference_constants)
    assert A2.mu == 2.0
    assert_allclose(A2.diag - A0.diag, 2.0)
    assert A2.offdiag == A0.offdiag
    assert_allclose(A0.shifted(2.0).diag, A2.diag)


def test_banded_storage(reference_constants):
    grid = LineGrid.from_half_width(1.0, 0.2)
    A = assemble(0.0, grid, reference_constants)
    ab = A.banded(shift=0.5)
    assert ab.shape == (3, grid.N)
    assert_allclose(ab[1], A.diag - 0.5)
    assert ab[0, 0] == 0.0 and ab[2, -1] == 0.0


def test_assemble_potential_checks_shape():
    grid = LineGrid.from_half_width(1.0, 0.1)
    with pytest.raises(ParameterError):
        assemble_potential(np.zeros(grid.N + 1), grid)


def test_operator_diagonal_is_read_only(reference_constants):
    A = assemble(0.0, LineGrid.from_half_width(1.0, 0.1), reference_constants)
    with pytest.raises(ValueError):
        A.diag[0] = 1.0
