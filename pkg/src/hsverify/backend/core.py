"""
VerificationEngine - The Central Orchestrator.

Wires the backend managers together by constructor injection. Managers are
exposed directly (e.g. engine.runs.run_sweep(...), engine.io.export_report(...)).
"""
from hsverify.backend.io import IOManager
from hsverify.backend.jobs import JobManager
from hsverify.backend.runs import RunManager


class VerificationEngine:
    """
    Central Orchestrator for the hsverify backend.

    Wiring:
    1. Base Managers (IO, Jobs)
    2. RunManager (depends on Jobs)

    Usage:
    - settings = engine.io.load_settings(path, overrides)
    - report = engine.runs.run_verify(settings.problem(), settings.numeric)
    - engine.io.export_report(report, "json", "out.json")
    """

    def __init__(self):
        self.io = IOManager()
        self.jobs = JobManager()

        # Runs dispatch through the job pool
        self.runs = RunManager(job_manager=self.jobs)
