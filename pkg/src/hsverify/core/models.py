from typing import Annotated, Any, Dict, List, Literal, Optional
from pydantic import AfterValidator, BaseModel, ConfigDict, Field

from enum import Enum
import math

import numpy as np

from hsverify.core.params import CaseTag, ProblemParams, SphereMode


def round_sig(value: float, digits: int = 12) -> float:
    """Round to `digits` significant digits; non-finite values pass through."""
    if not math.isfinite(value) or value == 0.0:
        return float(value)
    return float(f"{value:.{digits}g}")


# Report floats carry 12 significant digits from construction on, so the JSON
# and CSV renderings agree and JSON round-trips exactly.
Sig12 = Annotated[float, AfterValidator(round_sig)]


class Verdict(str, Enum):
    VERIFIED_DIM_1 = "verified_dim_1"
    BOUNDARY_DIM_N_PLUS_1 = "boundary_dim_n_plus_1"
    VIOLATION = "violation"
    INCONCLUSIVE = "inconclusive"


class ReportModel(BaseModel):
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")


# --- NUMERICAL CONTAINERS (not serialized) ---


class ModeSpectrum(BaseModel):
    """Discrete spectrum of A_mu below its essential threshold."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    mu: float
    essential_threshold: float
    eigenvalues: List[float]
    eigenfunctions: List[np.ndarray] = Field(default_factory=list)

    def shifted(self, mu: float) -> "ModeSpectrum":
        """Spectrum of A_(self.mu + mu); the operators differ by a constant diagonal."""
        return ModeSpectrum(
            mu=self.mu + mu,
            essential_threshold=self.essential_threshold + mu,
            eigenvalues=[e + mu for e in self.eigenvalues],
            eigenfunctions=self.eigenfunctions,
        )


class OracleSpectrum(BaseModel):
    """Closed-form bound states of A_0 read as a rescaled sech^2 well."""
    ell: float
    scale: float
    epsilon: float
    well_depth: float
    levels: List[float]
    margin: float

    model_config = ConfigDict(frozen=True)

    @property
    def lowest(self) -> float:
        return self.levels[0]


class OdeSolution(BaseModel):
    """RK4 solution of -phi'' + q phi = 0 sampled at every grid point."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    t: np.ndarray
    values: np.ndarray
    slopes: np.ndarray
    y0: float
    yp0: float
    step: float
    method_order: int = 4
    overflow: bool = False
    valid_length: int
    residual: float


# --- REPORTS ---


class GridInfo(ReportModel):
    T: Sig12
    h: Sig12
    N: int


class ResidualReport(ReportModel):
    name: str
    max_residual: Sig12
    argmax_t: Optional[Sig12] = None
    samples: int
    tol: Sig12
    passed: bool


class ConvergenceReport(ReportModel):
    name: str
    steps: List[Sig12]
    errors: List[Sig12]
    ratios: List[Sig12]
    observed_order: Sig12
    passed: bool


class ConvergenceStudy(ReportModel):
    h_refinement: ConvergenceReport
    truncation_change: Sig12
    truncation_tol: Sig12
    truncation_passed: bool

    @property
    def passed(self) -> bool:
        return self.h_refinement.passed and self.truncation_passed


class DecayFit(ReportModel):
    window: List[Sig12]
    slope: Sig12
    correlation: Sig12
    reference_slope: Optional[Sig12] = None


class OracleCheck(ReportModel):
    discrete: List[Sig12]
    oracle: List[Sig12]
    gaps: List[Sig12]
    max_gap: Sig12
    count_discrete: int
    count_oracle: int
    tol: Sig12
    passed: bool


class ZeroModeDiagnostics(ReportModel):
    eigenvalue: Sig12
    l2_error: Sig12
    ground_l2_error: Sig12
    parity_defect: Sig12
    sign_changes: int
    ground_sign_changes: int
    decay: DecayFit
    passed: bool


class ModeKernel(ReportModel):
    mode: SphereMode
    kernel_dim: int
    margin: Sig12
    lowest_eigenvalue: Sig12
    oracle_lowest: Sig12
    inconclusive: bool = False


class KernelReport(ReportModel):
    params: ProblemParams
    epsilon: Sig12
    lam: Sig12
    case: CaseTag
    grid: GridInfo
    per_mode: List[ModeKernel]
    total_dim: int
    verdict: Verdict
    zero_tol: Sig12
    separation: Sig12
    lowest_eigenvalue: Sig12
    oracle_lowest: Sig12
    theorem_margin_numeric: Sig12
    theorem_margin_oracle: Sig12
    oracle_check: Optional[OracleCheck] = None
    zero_mode: Optional[ZeroModeDiagnostics] = None
    convergence: Optional[ConvergenceStudy] = None
    notes: List[str] = Field(default_factory=list)


class MinimizationResult(ReportModel):
    m: Sig12
    m_stretched: Sig12
    localized: bool
    mass_fraction: Sig12
    mass_fraction_stretched: Sig12
    dichotomy_holds: bool


class SupersolutionReport(ReportModel):
    method: Literal["closed", "fd"]
    residual: ResidualReport
    rhs_min: Sig12
    rhs_max_abs: Sig12
    rhs_positive: bool
    rhs_vanishes: bool
    passed: bool


class VMembership(ReportModel):
    case: CaseTag
    fit: DecayFit
    predicted_exponent: Sig12
    decays: bool
    consistent: bool
    inconclusive: bool = False


class LemmaCheck(ReportModel):
    name: str
    passed: bool
    value: Optional[Sig12] = None
    detail: str = ""
    inconclusive: bool = False
    # hypotheses not met; passed stays False
    skipped: bool = False


class LemmaSuiteReport(ReportModel):
    params: ProblemParams
    checks: List[LemmaCheck]
    passed: bool
    inconclusive: bool = False


class IdentityReport(ReportModel):
    params: ProblemParams
    u_equation: ResidualReport
    lambda_recomputed: Sig12
    lambda_error: Sig12
    hat_profile: ResidualReport
    isometry_errors: List[Sig12]
    isometry_passed: bool
    laplacian: ConvergenceReport
    passed: bool


class RunReport(ReportModel):
    schema_version: Literal["1"] = "1"
    command: str
    config: Dict[str, Any] = Field(default_factory=dict)
    kernel_reports: List[KernelReport] = Field(default_factory=list)
    boundary_reports: List[KernelReport] = Field(default_factory=list)
    identity_reports: List[IdentityReport] = Field(default_factory=list)
    lemma_reports: List[LemmaSuiteReport] = Field(default_factory=list)
    errors: List[str] = Field(default_factory=list)
    summary: Dict[str, int] = Field(default_factory=dict)
    exit_code: int = 0
    timing: Optional[Dict[str, Sig12]] = None


# --- EXECUTION RECORDS (console only) ---


class JobInfo(BaseModel):
    """Status and timing of one triple dispatched to the worker pool."""
    job_id: str
    params: ProblemParams
    status: Literal["COMPLETED", "INCONCLUSIVE", "INVALID", "FAILED"]
    duration: float = 0.0
    error: Optional[str] = None
