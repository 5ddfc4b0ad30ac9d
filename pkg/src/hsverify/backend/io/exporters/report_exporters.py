from typing import Any, Dict, List

import polars as pl

from hsverify.backend.io.exporters.base import BaseExporter, ExporterOutput, ExportParams
from hsverify.core.models import KernelReport, RunReport, round_sig

# One row per (triple, mode); theorem triples first, then boundary triples
CSV_SCHEMA: Dict[str, Any] = {
    "n": pl.Int64,
    "s": pl.Float64,
    "gamma": pl.Float64,
    "epsilon": pl.Float64,
    "lambda": pl.Float64,
    "mu": pl.Float64,
    "kernel_dim": pl.Int64,
    "margin": pl.Float64,
    "lowest_eig": pl.Float64,
    "oracle_lowest": pl.Float64,
    "verdict": pl.Utf8,
}


def kernel_rows(reports: List[KernelReport]) -> List[Dict[str, Any]]:
    rows = []
    for rep in reports:
        for row in rep.per_mode:
            rows.append({
                "n": rep.params.n,
                # sweep gammas are products like 0.9 * 2.25
                "s": round_sig(rep.params.s),
                "gamma": round_sig(rep.params.gamma),
                "epsilon": rep.epsilon,
                "lambda": rep.lam,
                "mu": row.mode.mu,
                "kernel_dim": row.kernel_dim,
                "margin": row.margin,
                "lowest_eig": row.lowest_eigenvalue,
                "oracle_lowest": row.oracle_lowest,
                "verdict": rep.verdict.value,
            })
    return rows


def report_frame(report: RunReport) -> pl.DataFrame:
    rows = kernel_rows(report.kernel_reports + report.boundary_reports)
    return pl.DataFrame(rows, schema=CSV_SCHEMA)


class JsonReportExporter(BaseExporter[ExportParams]):
    """Full nested RunReport as indented JSON."""

    name = "json"
    extension = ".json"

    def _run_impl(self, payload: RunReport) -> ExporterOutput:
        with open(self.params.path, "w", encoding="utf-8") as f:
            f.write(payload.model_dump_json(indent=2))
            f.write("\n")
        return self._completed()


class CsvReportExporter(BaseExporter[ExportParams]):
    """Per-mode kernel table; header only when the report has no kernel rows."""

    name = "csv"
    extension = ".csv"

    def _run_impl(self, payload: RunReport) -> ExporterOutput:
        report_frame(payload).write_csv(self.params.path)
        return self._completed()
