"""
The supersolution V = e^t (U_hat' + (n-2)/2 U_hat) of the high modes.

    A_(n-1) V = e^t (2 gamma U_hat + s lambda U_hat^(2*(s)-1))

so V > 0 is a strict supersolution of every A_mu, mu >= n-1, once gamma+s > 0.
"""
from typing import Literal, Optional

import numpy as np

from hsverify.backend.operators.assembly import assemble, potential_q, well_profile
from hsverify.backend.operators.grid import LineGrid
from hsverify.backend.profiles.constants import classify_case, on_case_boundary
from hsverify.backend.profiles.functions import eval_V, eval_V_derivatives, log_u_hat
from hsverify.backend.spectral.eigvec import eigenfunction, normalize
from hsverify.backend.spectral.kernel import fit_decay
from hsverify.backend.spectral.sturm import eigenvalues_below
from hsverify.core.errors import InconclusiveError
from hsverify.core.models import LemmaCheck, ResidualReport, SupersolutionReport, VMembership
from hsverify.core.params import CaseTag, DerivedConstants, ProblemParams


def supersolution_rhs(t: np.ndarray, c: DerivedConstants) -> np.ndarray:
    """e^t (2 gamma U_hat + s lambda U_hat^(2*(s)-1)), evaluated as e^(t + log U_hat)(...)."""
    t = np.asarray(t, dtype=float)
    base = np.exp(t + np.asarray(log_u_hat(t, c)))
    return base * (2.0 * c.gamma + c.s * c.lam * np.asarray(well_profile(t, c)))


def supersolution_check(c: DerivedConstants, grid: LineGrid,
                        method: Literal["closed", "fd"] = "closed",
                        tol: Optional[float] = None) -> SupersolutionReport:
    """
    Residual of -V'' + q_(n-1) V against the closed-form right-hand side.

    The residual is measured relative to max(1, |V''|, |q V|, |rhs|) at each
    node, since V grows like e^((1-eps)t) when eps < 1.
    """
    t = grid.nodes
    q = np.asarray(potential_q(float(c.n - 1), t, c))
    if method == "closed":
        V = np.asarray(eval_V_derivatives(t, c, order=0))
        Vpp = np.asarray(eval_V_derivatives(t, c, order=2))
        tol = 1e-8 if tol is None else tol
    else:
        h = grid.h
        V = np.asarray(eval_V(t, c))
        Vpp = (np.asarray(eval_V(t + h, c)) - 2.0 * V + np.asarray(eval_V(t - h, c))) / h ** 2
        tol = 100.0 * h ** 2 if tol is None else tol
    rhs = supersolution_rhs(t, c)
    lhs = -Vpp + q * V
    scale = np.maximum.reduce([np.ones_like(t), np.abs(Vpp), np.abs(q * V), np.abs(rhs)])
    res = np.abs(lhs - rhs) / scale
    i = int(np.argmax(res))

    rhs_min = float(np.min(rhs))
    rhs_max_abs = float(np.max(np.abs(rhs)))
    strict = c.gamma + c.s > 0.0
    rhs_positive = bool(np.all(rhs > 0.0))
    rhs_vanishes = rhs_max_abs < 1e-12
    residual = ResidualReport(name=f"A_(n-1) V [{method}]", max_residual=float(res[i]),
                              argmax_t=float(t[i]), samples=len(t), tol=tol,
                              passed=bool(res[i] <= tol))
    passed = residual.passed and (rhs_positive if strict else rhs_vanishes)
    return SupersolutionReport(method=method, residual=residual, rhs_min=rhs_min,
                               rhs_max_abs=rhs_max_abs, rhs_positive=rhs_positive,
                               rhs_vanishes=rhs_vanishes, passed=passed)


def higher_mode_positivity(c: DerivedConstants, grid: LineGrid, mu: float) -> bool:
    """(A_mu V) - (A_(n-1) V) = (mu - (n-1)) V > 0 at every node for mu > n-1."""
    t = grid.nodes
    V = np.asarray(eval_V(t, c))
    A_hi = assemble(mu, grid, c)
    A_lo = assemble(float(c.n - 1), grid, c)
    diff = A_hi.matvec(V) - A_lo.matvec(V)
    return bool(np.all(diff > 0.0))


def translation_mode_check(c: DerivedConstants, grid: LineGrid, zero_tol: float,
                           abs_tol: float = 1e-10) -> LemmaCheck:
    """
    At gamma = s = 0, V is the kernel element of A_(n-1) (the translations).

    Compares normalized V with the eigenfunction of A_(n-1) in the zero band.
    """
    A1 = assemble(float(c.n - 1), grid, c)
    eigs = eigenvalues_below(A1, c.n - 1 + c.epsilon ** 2 - 1e-6, abs_tol)
    zeros = [e for e in eigs if abs(e) < zero_tol]
    if len(zeros) != 1:
        return LemmaCheck(name="translation_mode", passed=False,
                          detail=f"{len(zeros)} eigenvalues of A_(n-1) in the zero band")
    v = eigenfunction(A1, zeros[0], abs_tol)
    V = normalize(np.asarray(eval_V(grid.nodes, c)), grid.h)
    err = float(np.sqrt(grid.h) * min(np.linalg.norm(v - V), np.linalg.norm(v + V)))
    return LemmaCheck(name="translation_mode", passed=err < 1e-3, value=err,
                      detail=f"eigenvalue {zeros[0]:.3e}, L2 gap to V {err:.3e}")


def predicted_tail_exponent(c: DerivedConstants) -> float:
    """Growth rate of V at +inf: 1 - eps if gamma > 0, s - n/2 if gamma = 0."""
    if c.gamma > 0.0:
        return 1.0 - c.epsilon
    return c.s - c.n / 2.0


def V_membership_check(p: ProblemParams, c: DerivedConstants, grid: LineGrid,
                       flat_slope: float = 1e-3, min_correlation: float = 0.999) -> VMembership:
    """
    Fit the +inf exponent of V on [T/2, T] and compare its sign with the case.

    A slope within flat_slope of zero is the borderline exponent: V does not
    decay there. The correlation test only applies to non-flat fits.

    Raises:
        InconclusiveError: if a non-flat fit has correlation below min_correlation.
    """
    t = grid.nodes
    V = np.asarray(eval_V(t, c))
    fit = fit_decay(t, V, grid.T / 2.0, grid.T, rel_floor=0.0)
    flat = abs(fit.slope) <= flat_slope
    if not flat and abs(fit.correlation) < min_correlation:
        raise InconclusiveError(
            f"[V_membership_check] {p.label()}: tail fit correlation {fit.correlation:.6f}")

    case = classify_case(p)
    decays = fit.slope < -flat_slope
    boundary = on_case_boundary(p)
    consistent = decays == (case == CaseTag.CASE_I)
    return VMembership(
        case=case,
        fit=fit,
        predicted_exponent=predicted_tail_exponent(c),
        decays=decays,
        consistent=consistent and not boundary,
        inconclusive=boundary,
    )


def case_two_contradiction(c: DerivedConstants, grid: LineGrid) -> LemmaCheck:
    """
    The -inf side of V against the decay forced on a high-mode kernel element.

    V ~ e^((1+eps) t) as t -> -inf, while a kernel element of A_(n-1) decays
    faster than e^(alpha t) for every alpha < sqrt(eps^2 + n - 1). The two
    are incompatible exactly when 1 + eps < sqrt(eps^2 + n - 1), i.e. 2 eps < n - 2,
    i.e. gamma > 0. The fit confirms the rate 1 + eps; the comparison itself
    uses the exact rates, which coincide at gamma = 0.
    """
    t = grid.nodes
    V = np.asarray(eval_V(t, c))
    fit = fit_decay(-t[::-1], V[::-1], grid.T / 2.0, 0.75 * grid.T, rel_floor=0.0)
    rate = -fit.slope
    threshold = float(np.sqrt(c.epsilon ** 2 + c.n - 1))
    contradiction = 2.0 * c.epsilon < c.n - 2
    expected = c.gamma > 0.0
    rate_ok = abs(rate - (1.0 + c.epsilon)) <= 0.02 * (1.0 + c.epsilon)
    return LemmaCheck(
        name="case_two_contradiction",
        passed=rate_ok and contradiction == expected,
        value=rate,
        detail=f"left rate {rate:.6g} vs threshold {threshold:.6g} "
               f"(contradiction {'yes' if contradiction else 'no'}, expected {'yes' if expected else 'no'})",
    )
