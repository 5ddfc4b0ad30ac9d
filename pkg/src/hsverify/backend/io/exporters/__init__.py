from hsverify.backend.io.exporters.base import (
    BaseExporter, ExporterOutput, ExportParams, FileDetails
)
from hsverify.backend.io.exporters.report_exporters import (
    JsonReportExporter, CsvReportExporter, CSV_SCHEMA, kernel_rows, report_frame
)
from hsverify.backend.io.exporters.profile_exporter import ProfileCsvExporter

ALL_EXPORTERS = [JsonReportExporter, CsvReportExporter, ProfileCsvExporter]

__all__ = [
    "BaseExporter", "ExporterOutput", "ExportParams", "FileDetails",
    "JsonReportExporter", "CsvReportExporter", "ProfileCsvExporter",
    "CSV_SCHEMA", "kernel_rows", "report_frame", "ALL_EXPORTERS",
]
