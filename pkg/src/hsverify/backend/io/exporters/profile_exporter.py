import polars as pl

from hsverify.backend.io.exporters.base import BaseExporter, ExporterOutput, ExportParams


class ProfileCsvExporter(BaseExporter[ExportParams]):
    """Plot-ready profile table (one row per grid node)."""

    name = "profiles"
    extension = ".csv"

    def _run_impl(self, payload: pl.DataFrame) -> ExporterOutput:
        payload.write_csv(self.params.path)
        return self._completed()
