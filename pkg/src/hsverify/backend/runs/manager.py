"""
RunManager

The four batch pipelines (verify, sweep, identities, lemmas) and the mapping
from a finished RunReport to its exit code.
"""
from typing import Any, Callable, Dict, List, Optional

import time

import polars as pl

from hsverify.backend.jobs import JobManager
from hsverify.backend.runs.profiles import profile_frame
from hsverify.backend.runs.tasks import identity_task, lemma_task, verify_task
from hsverify.core.models import (
    IdentityReport, JobInfo, KernelReport, LemmaSuiteReport, RunReport
)
from hsverify.core.params import NumericConfig, ProblemParams, SweepSpec

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INCONCLUSIVE = 2
EXIT_INVALID = 3

SUMMARY_KEYS = (
    "verified_dim_1", "boundary_dim_n_plus_1", "violation", "inconclusive",
    "cross_check_failed", "identity_failed", "lemma_failed", "lemma_inconclusive",
    "invalid", "failed",
)

ProgressFn = Callable[[JobInfo], None]


def summarize(kernels: List[KernelReport], identities: List[IdentityReport],
              lemmas: List[LemmaSuiteReport], jobs: List[JobInfo]) -> Dict[str, int]:
    counts = dict.fromkeys(SUMMARY_KEYS, 0)
    for rep in kernels:
        counts[rep.verdict.value] += 1
        if rep.notes:
            counts["cross_check_failed"] += 1
    counts["identity_failed"] = sum(1 for r in identities if not r.passed)
    counts["lemma_failed"] = sum(1 for r in lemmas if not r.passed)
    counts["lemma_inconclusive"] = sum(1 for r in lemmas if r.inconclusive)
    for info in jobs:
        if info.status == "INCONCLUSIVE":
            counts["inconclusive"] += 1
        elif info.status == "INVALID":
            counts["invalid"] += 1
        elif info.status == "FAILED":
            counts["failed"] += 1
    return counts


def exit_code_for(summary: Dict[str, int]) -> int:
    """3 invalid input; 1 any violation; 2 inconclusive without violation; 0 otherwise."""
    if summary.get("invalid", 0):
        return EXIT_INVALID
    violated = ("violation", "cross_check_failed", "identity_failed", "lemma_failed", "failed")
    if any(summary.get(k, 0) for k in violated):
        return EXIT_VIOLATION
    if summary.get("inconclusive", 0) or summary.get("lemma_inconclusive", 0):
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def config_echo(config: NumericConfig, spec: Optional[SweepSpec] = None) -> Dict[str, Any]:
    # jobs is left out so serial and parallel runs produce identical reports
    echo = config.model_dump(mode="json", exclude={"jobs"})
    if spec is not None:
        echo["sweep"] = spec.model_dump(mode="json")
    return echo


class RunManager:
    """
    Orchestrates the batch pipelines.

    Dependencies:
    - JobManager: per-triple dispatch for sweeps and suites
    """

    def __init__(self, job_manager: "JobManager"):
        self._jobs = job_manager

    def _assemble(self, command: str, config: NumericConfig, jobs: List[JobInfo],
                  kernels: Optional[List[KernelReport]] = None,
                  identities: Optional[List[IdentityReport]] = None,
                  lemmas: Optional[List[LemmaSuiteReport]] = None,
                  spec: Optional[SweepSpec] = None,
                  timing: Optional[Dict[str, float]] = None) -> RunReport:
        kernels = kernels or []
        identities = identities or []
        lemmas = lemmas or []
        summary = summarize(kernels, identities, lemmas, jobs)
        return RunReport(
            command=command,
            config=config_echo(config, spec),
            kernel_reports=[k for k in kernels if not k.params.is_boundary],
            boundary_reports=[k for k in kernels if k.params.is_boundary],
            identity_reports=identities,
            lemma_reports=lemmas,
            errors=[f"{j.job_id}: {j.error}" for j in jobs if j.error],
            summary=summary,
            exit_code=exit_code_for(summary),
            timing=timing if config.timing else None,
        )

    def _dispatch(self, task, triples: List[ProblemParams], config: NumericConfig,
                  on_done: Optional[ProgressFn]):
        outcomes = self._jobs.run_all(task, triples, config, on_done=on_done)
        return [info for info, _ in outcomes], [res for _, res in outcomes if res is not None]

    def run_verify(self, p: ProblemParams, config: NumericConfig) -> RunReport:
        """Full pipeline for one triple; the lemma suite runs when config.with_lemmas."""
        start = time.perf_counter()
        jobs, results = self._dispatch(verify_task, [p], config.model_copy(update={"jobs": 1}), None)
        kernels = [k for k, _ in results]
        lemmas = [lem for _, lem in results if lem is not None]
        return self._assemble("verify", config, jobs, kernels=kernels, lemmas=lemmas,
                              timing={"verify": time.perf_counter() - start})

    def run_sweep(self, spec: SweepSpec, config: NumericConfig,
                  on_done: Optional[ProgressFn] = None) -> RunReport:
        """Every triple of the sweep, independently; boundary triples reported separately."""
        start = time.perf_counter()
        triples = spec.all_triples()
        jobs, results = self._dispatch(verify_task, triples, config, on_done)
        kernels = [k for k, _ in results]
        lemmas = [lem for _, lem in results if lem is not None]
        return self._assemble("sweep", config, jobs, kernels=kernels, lemmas=lemmas, spec=spec,
                              timing={"sweep": time.perf_counter() - start})

    def run_identities(self, config: NumericConfig, spec: Optional[SweepSpec] = None,
                       on_done: Optional[ProgressFn] = None) -> RunReport:
        """Emden-Fowler identities and the lambda recomputation over the sweep triples."""
        spec = spec or SweepSpec()
        start = time.perf_counter()
        jobs, identities = self._dispatch(identity_task, spec.all_triples(), config, on_done)
        return self._assemble("identities", config, jobs, identities=identities, spec=spec,
                              timing={"identities": time.perf_counter() - start})

    def run_lemmas(self, p: ProblemParams, config: NumericConfig) -> RunReport:
        start = time.perf_counter()
        jobs, lemmas = self._dispatch(lemma_task, [p], config.model_copy(update={"jobs": 1}), None)
        return self._assemble("lemmas", config, jobs, lemmas=lemmas,
                              timing={"lemmas": time.perf_counter() - start})

    def profiles(self, p: ProblemParams, config: NumericConfig) -> pl.DataFrame:
        return profile_frame(p, config)

