from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from enum import Enum

from hsverify.core.errors import ParameterError


# --- PROBLEM ---


class CaseTag(str, Enum):
    """Integrability classes of the supersolution V."""
    CASE_I = "CaseI"
    CASE_IIA = "CaseIIa"  # gamma > 0, epsilon <= 1
    CASE_IIB = "CaseIIb"  # gamma = 0, s >= n/2


class ProblemParams(BaseModel):
    """The triple (n, s, gamma) plus the admission mode it was validated under."""
    n: int
    s: float
    gamma: float
    mode: Literal["theorem", "boundary"] = "theorem"

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_ranges(self) -> "ProblemParams":
        if self.n < 3:
            raise ValueError(f"dimension n={self.n} must be >= 3")
        if not 0.0 <= self.s < 2.0:
            raise ValueError(f"s={self.s} must lie in [0, 2)")
        hardy_limit = (self.n - 2) ** 2 / 4.0
        if self.gamma < 0.0:
            raise ValueError(
                f"gamma={self.gamma} < 0 is outside the theorem's scope")
        if self.gamma >= hardy_limit:
            raise ValueError(
                f"gamma={self.gamma} must be < (n-2)^2/4 = {hardy_limit}")
        if self.mode == "theorem" and self.gamma + self.s <= 0.0:
            raise ValueError(
                "theorem requires γ+s>0; use boundary mode for γ=s=0")
        return self

    @property
    def is_boundary(self) -> bool:
        return self.gamma == 0.0 and self.s == 0.0

    @property
    def sort_key(self) -> Tuple[int, float, float]:
        return (self.n, self.s, self.gamma)

    def label(self) -> str:
        return f"n={self.n} s={self.s:g} γ={self.gamma:g}"


class DerivedConstants(BaseModel):
    """Every constant the analysis derives from (n, s, gamma)."""
    n: int
    s: float
    gamma: float
    epsilon: float
    alpha_minus: float
    alpha_plus: float
    two_star_s: float
    lam: float
    beta: float
    ell: float
    u_hat_zero: float

    model_config = ConfigDict(frozen=True)

    @property
    def scale(self) -> float:
        """Rescaling factor beta*epsilon of the Pöschl-Teller variable."""
        return self.beta * self.epsilon

    @property
    def half_dim(self) -> float:
        return (self.n - 2) / 2.0

    @property
    def well_coefficient(self) -> float:
        """(2*(s)-1) * lambda, the coefficient in front of U_hat^(2*(s)-2)."""
        return (self.two_star_s - 1.0) * self.lam


class SphereMode(BaseModel):
    """Eigenvalue level k(k+n-2) of -Δ on S^{n-1} with its multiplicity."""
    k: int = Field(ge=0)
    mu: float
    multiplicity: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)


# --- NUMERICS ---


class QuadratureSpec(BaseModel):
    rule: Literal["trapezoid", "simpson"] = "simpson"
    refinement_target: float = Field(default=1e-9, gt=0)
    max_levels: int = Field(default=16, ge=1)
    initial_intervals: int = Field(default=64, ge=2)


class NumericConfig(BaseModel):
    """Resolution, tolerances and execution knobs shared by every command."""
    T: Optional[float] = Field(default=None, gt=0)
    h_max: float = Field(default=0.005, gt=0)
    zero_tol: float = Field(default=5e-5, gt=0)
    separation: float = Field(default=1e-2, gt=0)
    eig_tol: float = Field(default=1e-10, gt=0)
    essential_gap: float = Field(default=1e-6, ge=0)
    k_max: int = Field(default=8, ge=1)
    max_nodes: int = Field(default=1_000_000, ge=3)
    jobs: Optional[int] = Field(default=None, ge=1)
    with_lemmas: bool = False
    with_convergence: bool = False
    timing: bool = False
    seed: int = 1234

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def _check_band(self) -> "NumericConfig":
        if self.zero_tol >= self.separation:
            raise ValueError(
                f"zero_tol={self.zero_tol} must be smaller than separation={self.separation}")
        return self


class SweepSpec(BaseModel):
    n_values: List[int] = Field(default_factory=lambda: [3, 4, 5, 6])
    s_values: List[float] = Field(default_factory=lambda: [0.0, 0.5, 1.0, 1.5])
    gamma_fractions: List[float] = Field(
        default_factory=lambda: [0.0, 0.25, 0.5, 0.9])
    include_boundary: bool = False

    model_config = ConfigDict(extra="forbid")

    @field_validator("gamma_fractions")
    @classmethod
    def _fractions_in_range(cls, values: List[float]) -> List[float]:
        for f in values:
            if not 0.0 <= f < 1.0:
                raise ValueError(f"gamma fraction {f} must lie in [0, 1)")
        return values

    def theorem_triples(self) -> List[ProblemParams]:
        """Theorem-mode triples ordered by (n, s, gamma); gamma+s=0 entries are skipped."""
        out = []
        for n in sorted(set(self.n_values)):
            for s in sorted(set(self.s_values)):
                for f in sorted(set(self.gamma_fractions)):
                    gamma = f * (n - 2) ** 2 / 4.0
                    if gamma + s <= 0.0:
                        continue
                    out.append(_build(n, s, gamma, "theorem"))
        return out

    def boundary_triples(self) -> List[ProblemParams]:
        if not self.include_boundary:
            return []
        return [_build(n, 0.0, 0.0, "boundary") for n in sorted(set(self.n_values))]

    def all_triples(self) -> List[ProblemParams]:
        return self.theorem_triples() + self.boundary_triples()


def _build(n: int, s: float, gamma: float, mode: str) -> ProblemParams:
    try:
        return ProblemParams(n=n, s=s, gamma=gamma, mode=mode)  # type: ignore[arg-type]
    except ValueError as e:
        raise ParameterError(f"[SweepSpec] invalid triple ({n}, {s}, {gamma}): {e}") from e


class RunSettings(BaseModel):
    """Config file values merged with command-line flags for one invocation."""
    numeric: NumericConfig = Field(default_factory=NumericConfig)
    sweep: SweepSpec = Field(default_factory=SweepSpec)
    n: Optional[int] = None
    s: Optional[float] = None
    gamma: Optional[float] = None
    boundary: bool = False

    model_config = ConfigDict(extra="forbid")

    def problem(self) -> ProblemParams:
        """The single triple of verify/lemmas/profiles runs."""
        missing = [k for k in ("n", "s", "gamma") if getattr(self, k) is None]
        if missing:
            raise ParameterError(f"[RunSettings] missing {', '.join('--' + k for k in missing)}")
        mode = "boundary" if self.boundary else "theorem"
        try:
            return ProblemParams(n=self.n, s=self.s, gamma=self.gamma, mode=mode)  # type: ignore[arg-type]
        except ValueError as e:
            raise ParameterError(f"[RunSettings] invalid triple: {e}") from e
