# Profiles - Single Responsibility: parameters, constants and closed-form profiles
from hsverify.backend.profiles.constants import (
    validate_params, derive_constants, classify_case, on_case_boundary
)
from hsverify.backend.profiles.functions import (
    eval_U, eval_U_prime, eval_U_hat, eval_Z_hat, eval_V, eval_V_explicit,
    eval_V_composition, eval_V_derivatives, log_u_hat
)
from hsverify.backend.profiles.sphere import sphere_modes, harmonic_dimension

__all__ = [
    "validate_params", "derive_constants", "classify_case", "on_case_boundary",
    "eval_U", "eval_U_prime", "eval_U_hat", "eval_Z_hat", "eval_V",
    "eval_V_explicit", "eval_V_composition", "eval_V_derivatives", "log_u_hat",
    "sphere_modes", "harmonic_dimension",
]
