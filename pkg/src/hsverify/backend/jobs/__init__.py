# Jobs Manager - Single Responsibility: per-triple dispatch on a worker pool
from hsverify.backend.jobs.manager import JobManager, run_job

__all__ = ["JobManager", "run_job"]
