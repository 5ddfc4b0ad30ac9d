from hsverify.cli.headless.pipeline import HeadlessPipeline
from hsverify.cli.headless.flags import FlagParser


def run_headless(args, ui, theme_manager) -> int:
    """
    Entry point for headless execution.
    Instantiates the pipeline, runs it and returns the exit code.
    """
    pipeline = HeadlessPipeline(ui, theme_manager)
    return pipeline.run(args)


__all__ = ["HeadlessPipeline", "FlagParser", "run_headless"]
