from typing import Literal

import math
from pydantic import ValidationError

from hsverify.core.errors import ParameterError
from hsverify.core.params import CaseTag, DerivedConstants, ProblemParams


def validate_params(n: int, s: float, gamma: float,
                    mode: Literal["theorem", "boundary"] = "theorem") -> ProblemParams:
    """
    Validate (n, s, gamma) against the theorem hypotheses.

    Boundary mode additionally admits gamma = s = 0, where the kernel picks up
    the n translation directions.

    Raises:
        ParameterError: on any range violation, with the offending condition.
    """
    try:
        return ProblemParams(n=n, s=s, gamma=gamma, mode=mode)
    except ValidationError as e:
        detail = "; ".join(err["msg"].removeprefix("Value error, ")
                           for err in e.errors())
        raise ParameterError(f"[ProblemParams] {detail}") from e


def derive_constants(p: ProblemParams) -> DerivedConstants:
    n, s, gamma = p.n, p.s, p.gamma
    half = (n - 2) / 2.0
    epsilon = math.sqrt(half * half - gamma)
    # alpha_minus = gamma / alpha_plus avoids cancellation for small gamma
    alpha_plus = half + epsilon
    alpha_minus = gamma / alpha_plus
    beta = (2.0 - s) / (n - 2)
    return DerivedConstants(
        n=n,
        s=s,
        gamma=gamma,
        epsilon=epsilon,
        alpha_minus=alpha_minus,
        alpha_plus=alpha_plus,
        two_star_s=2.0 * (n - s) / (n - 2),
        lam=4.0 * (n - s) / (n - 2) * epsilon * epsilon,
        beta=beta,
        ell=(n - s) / (2.0 - s),
        u_hat_zero=2.0 ** (-1.0 / beta),
    )


def classify_case(p: ProblemParams) -> CaseTag:
    """Integrability class of V: case (i) iff V lies in H^1(R)."""
    if p.gamma > 0.0:
        epsilon = math.sqrt((p.n - 2) ** 2 / 4.0 - p.gamma)
        return CaseTag.CASE_I if epsilon > 1.0 else CaseTag.CASE_IIA
    return CaseTag.CASE_I if p.s < p.n / 2.0 else CaseTag.CASE_IIB


def on_case_boundary(p: ProblemParams, tol: float = 1e-12) -> bool:
    """gamma > 0 with epsilon = 1, where the integrability dichotomy is not strict."""
    if p.gamma <= 0.0:
        return False
    epsilon = math.sqrt((p.n - 2) ** 2 / 4.0 - p.gamma)
    return abs(epsilon - 1.0) <= tol
