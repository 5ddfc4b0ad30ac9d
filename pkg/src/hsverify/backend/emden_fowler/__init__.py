# Emden-Fowler - Single Responsibility: hat transform, B-form and cylinder identities
from hsverify.backend.emden_fowler.transform import (
    RadialTestFunction, hat_transform, hat_derivative, radial_bump, random_bumps,
    power_profile, zero_function, extremal_profile
)
from hsverify.backend.emden_fowler.quadrature import integrate, sphere_area
from hsverify.backend.emden_fowler.identities import (
    b_form, dirichlet_energy_radial, check_laplacian_identity, laplacian_convergence,
    check_U_equation, check_hat_U, isometry_errors, run_identity_suite
)

__all__ = [
    "RadialTestFunction", "hat_transform", "hat_derivative", "radial_bump", "random_bumps",
    "power_profile", "zero_function", "extremal_profile",
    "integrate", "sphere_area",
    "b_form", "dirichlet_energy_radial", "check_laplacian_identity", "laplacian_convergence",
    "check_U_equation", "check_hat_U", "isometry_errors", "run_identity_suite",
]
