"""
JobManager

Runs one verification task per parameter triple, serially or on a process
pool, and hands results back in (n, s, gamma) order.
"""
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import os
import time
from concurrent.futures import ProcessPoolExecutor, as_completed

from hsverify.core.errors import InconclusiveError, ParameterError
from hsverify.core.models import JobInfo
from hsverify.core.params import NumericConfig, ProblemParams

TripleTask = Callable[[ProblemParams, NumericConfig], Any]
JobResult = Tuple[JobInfo, Any]


def run_job(task: TripleTask, p: ProblemParams, config: NumericConfig) -> JobResult:
    """Execute one task and classify its outcome; module level so it pickles."""
    start = time.perf_counter()
    result = None
    status, error = "COMPLETED", None
    try:
        result = task(p, config)
    except InconclusiveError as e:
        status, error = "INCONCLUSIVE", str(e)
    except ParameterError as e:
        status, error = "INVALID", str(e)
    except Exception as e:
        status, error = "FAILED", f"{type(e).__name__}: {e}"
    info = JobInfo(job_id=p.label(), params=p, status=status,  # type: ignore[arg-type]
                   duration=time.perf_counter() - start, error=error)
    return info, result


class JobManager:
    """
    Dispatches per-triple tasks.

    Aggregation is single-threaded and ordered by ProblemParams.sort_key, so
    the output does not depend on completion order or pool size.
    """

    def __init__(self):
        self._jobs: Dict[str, JobInfo] = {}

    @staticmethod
    def resolve_workers(jobs: Optional[int], n_tasks: int) -> int:
        workers = jobs if jobs is not None else (os.cpu_count() or 1)
        return max(1, min(workers, n_tasks))

    def run_all(self, task: TripleTask, triples: Sequence[ProblemParams],
                config: NumericConfig,
                on_done: Optional[Callable[[JobInfo], None]] = None) -> List[JobResult]:
        """Run `task` on every triple; results come back sorted by (n, s, gamma)."""
        if not triples:
            return []
        workers = self.resolve_workers(config.jobs, len(triples))
        results: List[JobResult] = []

        if workers == 1:
            for p in triples:
                outcome = run_job(task, p, config)
                self._record(outcome[0], on_done)
                results.append(outcome)
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(run_job, task, p, config) for p in triples]
                for future in as_completed(futures):
                    outcome = future.result()
                    self._record(outcome[0], on_done)
                    results.append(outcome)

        results.sort(key=lambda r: r[0].params.sort_key)
        return results

    def _record(self, info: JobInfo, on_done: Optional[Callable[[JobInfo], None]]) -> None:
        self._jobs[info.job_id] = info
        if on_done is not None:
            on_done(info)

    def get_job_status(self, job_id: str) -> Optional[JobInfo]:
        return self._jobs.get(job_id)

    def get_all_jobs(self) -> Dict[str, JobInfo]:
        return self._jobs.copy()
