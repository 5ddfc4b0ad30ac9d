import pytest
from hypothesis import strategies as st

from hsverify.backend.operators.grid import build_grid
from hsverify.backend.profiles.constants import derive_constants, validate_params
from hsverify.backend.spectral.kernel import total_kernel_dimension
from hsverify.core.params import NumericConfig


@st.composite
def theorem_triples(draw, max_n: int = 8):
    """(n, s, gamma) inside the theorem's range, with gamma + s > 0."""
    n = draw(st.integers(3, max_n))
    # keep away from gamma = s = 0, where the kernel jumps
    s = draw(st.one_of(st.just(0.0), st.floats(0.05, 1.9)))
    fraction = draw(st.one_of(st.just(0.0), st.floats(0.05, 0.95)))
    gamma = fraction * (n - 2) ** 2 / 4.0
    if gamma + s <= 0.0:
        s = 0.5
    return validate_params(n, s, gamma)


@pytest.fixture(scope="session")
def reference_params():
    """n = 3, s = 1, gamma = 0: eps = 1/2, lambda = 2, A_0 levels {-3/4, 0}."""
    return validate_params(3, 1.0, 0.0)


@pytest.fixture(scope="session")
def boundary_params():
    return validate_params(3, 0.0, 0.0, mode="boundary")


@pytest.fixture(scope="session")
def reference_constants(reference_params):
    return derive_constants(reference_params)


@pytest.fixture(scope="session")
def default_config():
    return NumericConfig()


@pytest.fixture(scope="session")
def reference_grid(reference_constants, default_config):
    return build_grid(reference_constants, default_config.zero_tol, default_config)


@pytest.fixture(scope="session")
def reference_kernel(reference_params, default_config):
    return total_kernel_dimension(reference_params, default_config)


@pytest.fixture(scope="session")
def boundary_kernel(boundary_params, default_config):
    return total_kernel_dimension(boundary_params, default_config)
