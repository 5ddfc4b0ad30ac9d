"""Per-triple tasks dispatched by JobManager (module level so they pickle)."""
from typing import Optional, Tuple

from hsverify.backend.emden_fowler.identities import run_identity_suite
from hsverify.backend.lemmas.suite import run_lemma_suite
from hsverify.backend.oracle.convergence import convergence_study
from hsverify.backend.profiles.constants import derive_constants
from hsverify.backend.spectral.kernel import total_kernel_dimension
from hsverify.core.models import IdentityReport, KernelReport, LemmaSuiteReport
from hsverify.core.params import NumericConfig, ProblemParams


def verify_task(p: ProblemParams,
                config: NumericConfig) -> Tuple[KernelReport, Optional[LemmaSuiteReport]]:
    kernel = total_kernel_dimension(p, config)
    if config.with_convergence:
        study = convergence_study(derive_constants(p), config)
        notes = list(kernel.notes)
        if not study.passed:
            notes.append("convergence study failed")
        kernel = kernel.model_copy(update={"convergence": study, "notes": notes})
    lemmas = run_lemma_suite(p, config) if config.with_lemmas else None
    return kernel, lemmas


def identity_task(p: ProblemParams, config: NumericConfig) -> IdentityReport:
    return run_identity_suite(p, config)


def lemma_task(p: ProblemParams, config: NumericConfig) -> LemmaSuiteReport:
    return run_lemma_suite(p, config)
