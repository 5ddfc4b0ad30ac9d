from typing import Any, Dict, List, Optional, Sequence, Tuple

import time
from rich import box
from rich.console import Console
from rich.progress import (
    BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
)
from rich.table import Table
from rich.text import Text

from hsverify.cli.branding.theme_manager import ThemeManager
from hsverify.core.models import IdentityReport, JobInfo, KernelReport, LemmaSuiteReport

VERDICT_STYLES = {
    "verified_dim_1": "bold green",
    "boundary_dim_n_plus_1": "bold cyan",
    "violation": "bold red",
    "inconclusive": "bold yellow",
    "pass": "green",
    "FAIL": "bold red",
    "skipped": "dim",
}

# leading columns, in this order, whenever a table has them
_LEAD_COLUMNS = ("Triple", "Mode", "Check", "Verdict", "Status")


def _status(passed: bool, inconclusive: bool = False, skipped: bool = False) -> str:
    if skipped:
        return "skipped"
    if inconclusive:
        return "inconclusive"
    return "pass" if passed else "FAIL"


class ConsoleUI:
    """
    Rich console front of the verifier. Styles come from ThemeManager.

    quiet=True silences everything except errors.
    """

    def __init__(self, theme_manager: ThemeManager, quiet: bool = False,
                 console: Optional[Console] = None):
        self._console = console or Console()
        self._theme_manager = theme_manager
        self._start_time = time.perf_counter()
        self.quiet = quiet

    @property
    def console(self) -> Console:
        return self._console

    @property
    def accent(self) -> str:
        return self._theme_manager.get_theme()["border_style"]

    def elapsed(self) -> float:
        return time.perf_counter() - self._start_time

    def gradient_text(self, text: str, start: Tuple[int, int, int],
                      end: Tuple[int, int, int]) -> Text:
        """Line-by-line color blend from start to end."""
        lines = text.split("\n")
        out = Text()
        for i, line in enumerate(lines):
            w = i / max(len(lines) - 1, 1)
            rgb = [int(a + (b - a) * w) for a, b in zip(start, end)]
            out.append(line + "\n", style=f"rgb({rgb[0]},{rgb[1]},{rgb[2]})")
        return out

    # --- log lines ---

    def log_step(self, message: str, module: str = "HSVERIFY", icon: str = "•",
                 style: Optional[str] = None):
        if self.quiet:
            return
        tag_style = style or self.accent
        self._console.print(
            f"[dim] [ {self.elapsed():8.3f}s ][/dim] "
            f"[bold {tag_style}][ {module.center(9)} ][/bold {tag_style}] {icon}  {message}"
        )

    def log_error(self, message: str, details: str = ""):
        self._console.print(f"[bold red]❌ {message}[/bold red]")
        if details:
            self._console.print(f"[dim red]   {details}[/dim red]")

    def log_warning(self, message: str):
        if not self.quiet:
            self._console.print(f"[yellow]⚠️  {message}[/yellow]")

    def log_success(self, message: str):
        if not self.quiet:
            self._console.print(f"\n[bold green] ➤ {message} ({self.elapsed():.3f}s)[/bold green]\n")

    # --- tables ---

    def log_table(self, items: List[Dict[str, Any]], title: str = "Details"):
        """Rows of str-able values; verdict and status cells are colored."""
        if not items or self.quiet:
            return

        columns = list(dict.fromkeys(key for item in items for key in item))
        ordered = [c for c in _LEAD_COLUMNS if c in columns] + \
            [c for c in columns if c not in _LEAD_COLUMNS]

        table = Table(title=f"[bold]{title}[/bold]", box=box.ROUNDED,
                      header_style=f"bold {self.accent}", row_styles=["none", "dim"],
                      collapse_padding=True)
        for col in ordered:
            table.add_column(col.replace("_", " "), style="cyan")
        for item in items:
            cells = []
            for col in ordered:
                value = str(item.get(col, ""))
                style = VERDICT_STYLES.get(value)
                cells.append(f"[{style}]{value}[/{style}]" if style else value)
            table.add_row(*cells)

        self._console.print(table)
        self._console.print()

    def log_kernel_reports(self, kernels: Sequence[KernelReport], dev: bool = False):
        rows = []
        for rep in kernels:
            rows.append({
                "Triple": rep.params.label(),
                "Mode": rep.params.mode,
                "Verdict": rep.verdict.value,
                "Total_Dim": rep.total_dim,
                "Lowest_Eig": f"{rep.lowest_eigenvalue:.8g}",
                "Oracle": f"{rep.oracle_lowest:.8g}",
                "Theorem_Margin": f"{rep.theorem_margin_numeric:.6g}",
                "Notes": "; ".join(rep.notes),
            })
            if dev:
                self.log_step(f"{rep.params.label()}: T={rep.grid.T:g} h={rep.grid.h:g} "
                              f"N={rep.grid.N}", module="DEV-MODE", icon="🔍")
        self.log_table(rows, title="Kernel Verdicts")

    def log_lemma_suite(self, suite: LemmaSuiteReport):
        self.log_table([{
            "Check": ch.name,
            "Status": _status(ch.passed, ch.inconclusive, ch.skipped),
            "Value": "" if ch.value is None else f"{ch.value:.6g}",
            "Detail": ch.detail,
        } for ch in suite.checks], title=f"Lemma Suite {suite.params.label()}")

    def log_convergence(self, kernels: Sequence[KernelReport]):
        rows = []
        for rep in kernels:
            study = rep.convergence
            if study is None:
                continue
            h = study.h_refinement
            rows.append({
                "Triple": rep.params.label(),
                "Status": _status(study.passed),
                "Steps": ", ".join(f"{s:g}" for s in h.steps),
                "Errors": ", ".join(f"{e:.3e}" for e in h.errors),
                "Ratios": ", ".join(f"{r:.3f}" for r in h.ratios),
                "Order": f"{h.observed_order:.3f}",
                "Truncation_Change": f"{study.truncation_change:.3e}",
            })
        self.log_table(rows, title="Convergence Study")

    def log_identity_reports(self, reports: Sequence[IdentityReport]):
        self.log_table([{
            "Triple": rep.params.label(),
            "Status": _status(rep.passed),
            "Lambda_Error": f"{rep.lambda_error:.3e}",
            "U_Residual": f"{rep.u_equation.max_residual:.3e}",
            "Max_Isometry": f"{max(rep.isometry_errors):.3e}",
            "Laplacian_Order": f"{rep.laplacian.observed_order:.3f}",
        } for rep in reports], title="Emden-Fowler Identities")

    def log_outcome(self, exit_code: int, summary: Dict[str, int]):
        counts = ", ".join(f"{k}={v}" for k, v in summary.items() if v)
        if exit_code == 0:
            self.log_success(f"All checks passed ({counts or 'nothing to check'})")
        else:
            self.log_error(f"Exit code {exit_code}", counts)

    def track_jobs(self, description: str, total: int, module: str = "SWEEP") -> "JobProgress":
        """Progress bar advanced once per finished triple."""
        return JobProgress(self, description, total, module)


class JobProgress:
    """Context manager around a rich Progress; inert when the UI is quiet."""

    def __init__(self, ui: ConsoleUI, description: str, total: int, module: str):
        self.ui = ui
        self.description = description
        self.total = total
        self.module = module
        self.failed = 0
        self._progress: Optional[Progress] = None
        self._task = None

    def __enter__(self) -> "JobProgress":
        if self.ui.quiet:
            return self
        style = self.ui.accent
        self._progress = Progress(
            SpinnerColumn(style=style),
            TextColumn(f"[bold {style}][ {self.module.center(9)} ][/bold {style}]"),
            TextColumn(f"[bold]{self.description}[/bold]"),
            BarColumn(bar_width=None, style=style),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.ui.console,
            transient=True,
        )
        self._progress.start()
        self._task = self._progress.add_task(self.description, total=self.total)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self._progress is not None:
            self._progress.stop()
        if self.failed:
            self.ui.log_warning(f"{self.failed} of {self.total} triple(s) did not complete")

    def on_done(self, info: JobInfo) -> None:
        if info.status != "COMPLETED":
            self.failed += 1
        if self._progress is not None:
            self._progress.advance(self._task)
