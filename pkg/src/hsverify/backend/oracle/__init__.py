# Analytic Oracle - Single Responsibility: closed-form reference spectrum of A_0
from hsverify.backend.oracle.poschl_teller import (
    oracle_spectrum, theorem_margin, oracle_cross_check, oracle_ground_state,
    well_depth_closed_form
)
from hsverify.backend.oracle.convergence import (
    convergence_study, observed_order, error_ratios
)

__all__ = [
    "oracle_spectrum", "theorem_margin", "oracle_cross_check", "oracle_ground_state",
    "well_depth_closed_form", "convergence_study", "observed_order", "error_ratios",
]
