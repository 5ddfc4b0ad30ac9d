import os

from hsverify.backend import VerificationEngine
from hsverify.backend.runs import EXIT_INVALID, EXIT_OK
from hsverify.core.errors import ParameterError
from hsverify.core.models import RunReport
from hsverify.core.params import RunSettings

from hsverify.cli.headless.flags import FlagParser


class HeadlessPipeline:
    """
    Orchestrates one CLI invocation: settings, run, console summary, export.

    `run(args)` returns the process exit code.
    """

    def __init__(self, ui, theme_manager):
        self.engine = VerificationEngine()
        self.ui = ui
        self.theme_manager = theme_manager

    def run(self, args) -> int:
        try:
            settings = self.engine.io.load_settings(
                getattr(args, "config", None), FlagParser.overrides(args))
        except ParameterError as e:
            self.ui.log_error("Invalid Configuration", str(e))
            return EXIT_INVALID

        if args.dev:
            self.ui.log_step(f"Numeric config: {settings.numeric.model_dump()}",
                             module="DEV-MODE", icon="🛠️")

        try:
            if args.command == "report":
                return self._mode_report(args, settings)
            report = self._dispatch(args, settings)
            self._show_summary(report, args)
            self._emit(report, args)
        except ParameterError as e:
            self.ui.log_error("Invalid Input", str(e))
            return EXIT_INVALID
        except OSError as e:
            self.ui.log_error("Output Error", str(e))
            return EXIT_INVALID

        for err in report.errors:
            self.ui.log_warning(err)
        self.ui.log_outcome(report.exit_code, report.summary)
        return report.exit_code

    # --- commands ---

    def _dispatch(self, args, settings: RunSettings) -> RunReport:
        runs = self.engine.runs
        if args.command == "verify":
            p = settings.problem()
            self.ui.log_step(f"Verifying {p.label()} ({p.mode})", module="KERNEL", icon="⚡")
            return runs.run_verify(p, settings.numeric)
        if args.command == "lemmas":
            p = settings.problem()
            self.ui.log_step(f"Lemma suite for {p.label()}", module="LEMMAS", icon="📐")
            return runs.run_lemmas(p, settings.numeric)

        triples = settings.sweep.all_triples()
        if args.command == "sweep":
            self.ui.log_step(f"Sweeping {len(triples)} triples on "
                             f"{self.engine.jobs.resolve_workers(settings.numeric.jobs, len(triples))} "
                             f"worker(s)", module="SWEEP", icon="🧮")
            with self.ui.track_jobs("Verifying triples", len(triples), module="SWEEP") as progress:
                return runs.run_sweep(settings.sweep, settings.numeric, on_done=progress.on_done)
        if args.command == "identities":
            self.ui.log_step(f"Identity suite over {len(triples)} triples",
                             module="IDENTITY", icon="🔁")
            with self.ui.track_jobs("Checking identities", len(triples), module="IDENTITY") as progress:
                return runs.run_identities(settings.numeric, settings.sweep, on_done=progress.on_done)
        raise ParameterError(f"[HeadlessPipeline] unknown command: {args.command}")

    def _mode_report(self, args, settings: RunSettings) -> int:
        if not args.out:
            raise ParameterError("[report] --out is required")
        if args.profiles:
            p = settings.problem()
            self.ui.log_step(f"Sampling profiles for {p.label()}", module="PROFILES", icon="📈")
            frame = self.engine.runs.profiles(p, settings.numeric)
            result = self.engine.io.export_profiles(frame, args.out)
        elif args.input:
            report = self.engine.io.read_report(args.input)
            self.ui.log_step(f"Re-emitting {args.input} as {args.format}", module="I/O", icon="📤")
            result = self.engine.io.export_report(report, args.format, args.out)
        else:
            raise ParameterError("[report] need --input or --profiles")
        self.ui.log_success(f"Wrote {args.out} ({result.size_str})")
        return EXIT_OK

    # --- output ---

    def _emit(self, report: RunReport, args) -> None:
        if not args.out:
            self.ui.log_step("No --out given; report kept on the console only",
                             module="I/O", icon="📭")
            return
        result = self.engine.io.export_report(report, args.format, args.out)
        self.ui.log_step(f"Report written: {os.path.abspath(args.out)} ({result.size_str})",
                         module="I/O", icon="💾")

    def _show_summary(self, report: RunReport, args) -> None:
        kernels = report.kernel_reports + report.boundary_reports
        if kernels:
            self.ui.log_kernel_reports(kernels, dev=args.dev)
            self.ui.log_convergence(kernels)
        for suite in report.lemma_reports:
            self.ui.log_lemma_suite(suite)
        if report.identity_reports:
            self.ui.log_identity_reports(report.identity_reports)
