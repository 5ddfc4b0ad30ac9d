# Run Manager - Single Responsibility: batch pipelines and exit-code semantics
from hsverify.backend.runs.manager import (
    RunManager, summarize, exit_code_for, config_echo,
    EXIT_OK, EXIT_VIOLATION, EXIT_INCONCLUSIVE, EXIT_INVALID
)
from hsverify.backend.runs.profiles import profile_frame
from hsverify.backend.runs.tasks import verify_task, identity_task, lemma_task

__all__ = [
    "RunManager", "summarize", "exit_code_for", "config_echo",
    "EXIT_OK", "EXIT_VIOLATION", "EXIT_INCONCLUSIVE", "EXIT_INVALID",
    "profile_frame", "verify_task", "identity_task", "lemma_task",
]
