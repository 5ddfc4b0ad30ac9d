"""
IOManager

Provides a unified interface for:
- Run configuration files
- Report export (JSON, CSV) and profile CSVs
- Reading JSON reports back
"""
from typing import Any, Dict, List, Mapping, Optional, Type

import os

import polars as pl
from pydantic import ValidationError

from hsverify.backend.io.config import load_config_file, resolve_settings
from hsverify.backend.io.exporters import ALL_EXPORTERS, BaseExporter, ExporterOutput
from hsverify.core.errors import ParameterError
from hsverify.core.models import RunReport
from hsverify.core.params import RunSettings


class IOManager:
    """
    Manages every file the verifier reads or writes.

    Exporters are registered by name ("json", "csv", "profiles").
    """

    def __init__(self):
        self._exporters: Dict[str, Type[BaseExporter]] = {}
        self._register_defaults()

    def _register_defaults(self):
        for e in ALL_EXPORTERS:
            self._exporters[e.name] = e

    # ========== Exporter Registry ==========

    def get_exporters(self) -> List[Type[BaseExporter]]:
        return list(self._exporters.values())

    def get_exporter(self, name: str) -> Optional[Type[BaseExporter]]:
        return self._exporters.get(name.lower())

    # ========== Configuration ==========

    def load_settings(self, config_path: Optional[str] = None,
                      overrides: Optional[Mapping[str, Any]] = None) -> RunSettings:
        """Config file (if any) merged with flag overrides; flags win."""
        file_values = load_config_file(config_path) if config_path else {}
        return resolve_settings(file_values, overrides)

    # ========== Reports ==========

    def export_report(self, report: RunReport, fmt: str, path: str) -> ExporterOutput:
        """
        Raises:
            ParameterError: unknown format.
            OSError: unwritable path.
        """
        if fmt.lower() == "profiles":
            raise ParameterError("[IOManager] profiles are written with export_profiles")
        exporter = self.get_exporter(fmt)
        if exporter is None:
            raise ParameterError(f"[IOManager] unknown report format: {fmt}")
        return exporter({"path": path}).run(report)

    def export_profiles(self, frame: pl.DataFrame, path: str) -> ExporterOutput:
        return self._exporters["profiles"]({"path": path}).run(frame)

    def read_report(self, path: str) -> RunReport:
        """
        Raises:
            ParameterError: missing file or not a valid report.
        """
        if not os.path.exists(path):
            raise ParameterError(f"[IOManager] report not found: {path}")
        with open(path, "r", encoding="utf-8") as f:
            text = f.read()
        try:
            return RunReport.model_validate_json(text)
        except ValidationError as e:
            raise ParameterError(f"[IOManager] {path} is not a valid report: {e}") from e

    def default_path(self, command: str, fmt: str) -> str:
        exporter = self.get_exporter(fmt)
        ext = exporter.extension if exporter else f".{fmt.lower()}"
        return f"hsverify_{command}{ext}"
