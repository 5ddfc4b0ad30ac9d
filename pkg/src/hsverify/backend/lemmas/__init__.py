# Lemma Suite - Single Responsibility: numerical checks of the auxiliary lemmas
from hsverify.backend.lemmas.variational import (
    lemma3_minimize, constant_potential, selfadjointness_check, selfadjointness_tolerance,
    lemma4_positive_q, lemma4_decay_bound, decay_radius, lemma5_dimension_check,
    zero_band_count, potential_positivity_sweep
)
from hsverify.backend.lemmas.shooting import ode_shoot, lemma5_wronskian
from hsverify.backend.lemmas.supersolution import (
    supersolution_rhs, supersolution_check, higher_mode_positivity, translation_mode_check,
    predicted_tail_exponent, V_membership_check, case_two_contradiction
)
from hsverify.backend.lemmas.suite import LemmaSuite, run_lemma_suite

__all__ = [
    "lemma3_minimize", "constant_potential", "selfadjointness_check", "selfadjointness_tolerance",
    "lemma4_positive_q", "lemma4_decay_bound", "decay_radius", "lemma5_dimension_check",
    "zero_band_count", "potential_positivity_sweep",
    "ode_shoot", "lemma5_wronskian",
    "supersolution_rhs", "supersolution_check", "higher_mode_positivity", "translation_mode_check",
    "predicted_tail_exponent", "V_membership_check", "case_two_contradiction",
    "LemmaSuite", "run_lemma_suite",
]
