import json

import polars as pl
import pytest

from hsverify.backend.io import IOManager, load_config_file, parse_config_text, resolve_settings
from hsverify.backend.io.exporters import CSV_SCHEMA, report_frame
from hsverify.backend.runs import EXIT_OK, RunManager, config_echo, profile_frame, summarize
from hsverify.backend.jobs import JobManager
from hsverify.backend.profiles.constants import validate_params
from hsverify.core.errors import ParameterError
from hsverify.core.models import RunReport
from hsverify.core.params import NumericConfig

CONFIG_TEXT = """
# resolution
h = 0.004
zero-tol = 1e-5     # tighter band
modes = 6
n_values = 3, 4
gamma_fractions = 0, 0.5
n = 3
s = 1
gamma = 0
"""


@pytest.fixture(scope="module")
def io_manager():
    return IOManager()


@pytest.fixture(scope="module")
def verify_report(reference_kernel, default_config):
    # assembled the way RunManager does, reusing the session kernel
    summary = summarize([reference_kernel], [], [], [])
    return RunReport(command="verify", config=config_echo(default_config),
                     kernel_reports=[reference_kernel], summary=summary, exit_code=EXIT_OK)


# --- config files ---


def test_parse_config_text():
    values = parse_config_text(CONFIG_TEXT)
    assert values["h_max"] == "0.004"
    assert values["zero_tol"] == "1e-5"
    assert values["k_max"] == "6"
    assert values["n_values"] == ["3", "4"]
    assert values["gamma_fractions"] == ["0", "0.5"]
    assert values["n"] == "3"


@pytest.mark.parametrize("text, message", [
    ("bogus = 1", "unknown key"),
    ("h = 0.01\nh_max = 0.02", "set twice"),
    ("just a line", "expected 'key = value'"),
])
def test_parse_config_text_errors(text, message):
    with pytest.raises(ParameterError, match=message):
        parse_config_text(text)


def test_resolve_settings_merges_flags_over_file():
    settings = resolve_settings(parse_config_text(CONFIG_TEXT),
                                {"h_max": 0.002, "zero_tol": None, "jobs": 2})
    assert settings.numeric.h_max == 0.002
    assert settings.numeric.zero_tol == 1e-5
    assert settings.numeric.k_max == 6
    assert settings.numeric.jobs == 2
    assert settings.sweep.n_values == [3, 4]
    assert settings.problem().sort_key == (3, 1.0, 0.0)


def test_convergence_key_alias():
    values = parse_config_text("convergence = true\nlemmas = yes\n")
    settings = resolve_settings(values)
    assert settings.numeric.with_convergence is True
    assert settings.numeric.with_lemmas is True


def test_resolve_settings_rejects_bad_values():
    with pytest.raises(ParameterError):
        resolve_settings({"h_max": "-1"})
    with pytest.raises(ParameterError):
        resolve_settings({}, {"zero_tol": 0.1, "separation": 0.01})
    with pytest.raises(ParameterError, match="unknown settings"):
        resolve_settings({}, {"colour": "red"})


def test_load_config_file(tmp_path, io_manager):
    path = tmp_path / "run.conf"
    path.write_text(CONFIG_TEXT, encoding="utf-8")
    assert load_config_file(str(path))["k_max"] == "6"
    settings = io_manager.load_settings(str(path), {"n": 4, "s": 0.5, "gamma": 0.25})
    assert settings.problem().sort_key == (4, 0.5, 0.25)


def test_load_config_file_missing(tmp_path):
    with pytest.raises(ParameterError, match="cannot read"):
        load_config_file(str(tmp_path / "absent.conf"))


# --- exporters ---


def test_exporter_registry(io_manager):
    names = sorted(e.name for e in io_manager.get_exporters())
    assert names == ["csv", "json", "profiles"]
    assert io_manager.get_exporter("JSON").name == "json"
    assert io_manager.get_exporter("xlsx") is None
    assert io_manager.default_path("sweep", "csv") == "hsverify_sweep.csv"


def test_csv_header_only_for_empty_report(tmp_path, io_manager):
    path = tmp_path / "empty.csv"
    out = io_manager.export_report(RunReport(command="sweep"), "csv", str(path))
    assert out.status == "COMPLETED"
    assert path.read_text(encoding="utf-8").strip() == ",".join(CSV_SCHEMA)


def test_csv_rows_for_reference_triple(tmp_path, io_manager, verify_report):
    path = tmp_path / "verify.csv"
    io_manager.export_report(verify_report, "csv", str(path))
    frame = pl.read_csv(path)
    assert frame.columns == list(CSV_SCHEMA)
    assert frame["mu"].to_list() == [0.0, 2.0]
    assert frame["kernel_dim"].to_list() == [1, 0]
    assert frame["verdict"].unique().to_list() == ["verified_dim_1"]
    assert frame["lowest_eig"][0] == pytest.approx(-0.75, abs=1e-4)


def test_csv_rounds_sweep_gamma(tmp_path, io_manager, reference_kernel):
    # 0.9 * 2.25 == 2.0250000000000004 in binary
    p = validate_params(5, 1.0, 0.9 * 2.25)
    kernel = reference_kernel.model_copy(update={"params": p})
    path = tmp_path / "sweep.csv"
    io_manager.export_report(RunReport(command="sweep", kernel_reports=[kernel]), "csv", str(path))
    text = path.read_text(encoding="utf-8")
    assert "2.0250000000000004" not in text
    assert pl.read_csv(path)["gamma"].to_list() == [2.025, 2.025]


def test_report_frame_orders_theorem_before_boundary(verify_report, boundary_kernel):
    report = verify_report.model_copy(update={"boundary_reports": [boundary_kernel]})
    frame = report_frame(report)
    assert frame["s"].to_list() == [1.0, 1.0, 0.0, 0.0]
    assert frame["verdict"].to_list()[-1] == "boundary_dim_n_plus_1"


def test_json_report_round_trip(tmp_path, io_manager, verify_report):
    path = tmp_path / "nested" / "verify.json"
    out = io_manager.export_report(verify_report, "json", str(path))
    assert out.file_details[0].size > 0
    assert io_manager.read_report(str(path)) == verify_report

    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["schema_version"] == "1"
    assert data["kernel_reports"][0]["verdict"] == "verified_dim_1"
    assert "jobs" not in data["config"]


def test_export_report_rejects_unknown_format(tmp_path, io_manager, verify_report):
    with pytest.raises(ParameterError):
        io_manager.export_report(verify_report, "xlsx", str(tmp_path / "r.xlsx"))
    with pytest.raises(ParameterError):
        io_manager.export_report(verify_report, "profiles", str(tmp_path / "r.csv"))


def test_read_report_errors(tmp_path, io_manager):
    with pytest.raises(ParameterError, match="not found"):
        io_manager.read_report(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text('{"command": 3}', encoding="utf-8")
    with pytest.raises(ParameterError, match="not a valid report"):
        io_manager.read_report(str(bad))


def test_profile_export(tmp_path, io_manager, reference_params):
    config = NumericConfig(h_max=0.01)
    frame = RunManager(JobManager()).profiles(reference_params, config)
    assert frame.columns == ["t", "U_hat", "U_hat_prime", "V", "Z_hat", "ground", "zero_mode"]
    center = frame.height // 2
    assert frame["t"][center] == 0.0
    assert frame["U_hat"][center] == pytest.approx(0.5)
    assert frame["ground"][center] > 0.0
    assert (frame["zero_mode"] * frame["Z_hat"]).sum() > 0.0

    path = tmp_path / "profiles.csv"
    out = io_manager.export_profiles(frame, str(path))
    assert out.status == "COMPLETED"
    assert pl.read_csv(path).height == frame.height


def test_profile_frame_without_zero_mode(reference_params):
    # a short line pushes the odd state far out of the zero band
    config = NumericConfig(T=3.0, h_max=0.01)
    frame = profile_frame(reference_params, config)
    assert frame["zero_mode"].null_count() == frame.height
