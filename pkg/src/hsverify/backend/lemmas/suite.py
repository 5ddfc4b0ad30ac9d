from typing import Callable, List, Optional

import math
import numpy as np

from hsverify.backend.lemmas.shooting import lemma5_wronskian, ode_shoot
from hsverify.backend.lemmas.supersolution import (
    V_membership_check, case_two_contradiction, higher_mode_positivity, supersolution_check,
    translation_mode_check
)
from hsverify.backend.lemmas.variational import (
    constant_potential, decay_radius, lemma3_minimize, lemma4_decay_bound, lemma4_positive_q,
    potential_positivity_sweep, selfadjointness_check, selfadjointness_tolerance, zero_band_count
)
from hsverify.backend.operators.assembly import potential_positivity_check, potential_q
from hsverify.backend.operators.grid import LineGrid, build_grid
from hsverify.backend.oracle.convergence import error_ratios
from hsverify.backend.oracle.poschl_teller import theorem_margin
from hsverify.backend.profiles.constants import derive_constants
from hsverify.backend.profiles.functions import eval_V
from hsverify.backend.spectral.eigvec import resolved_tail
from hsverify.backend.spectral.kernel import solve_mode_spectrum
from hsverify.core.errors import HsVerifyError, InconclusiveError
from hsverify.core.models import LemmaCheck, LemmaSuiteReport
from hsverify.core.params import DerivedConstants, NumericConfig, ProblemParams


def _guard(name: str, fn: Callable[[], LemmaCheck]) -> LemmaCheck:
    try:
        return fn()
    except InconclusiveError as e:
        return LemmaCheck(name=name, passed=False, inconclusive=True, detail=str(e))
    except HsVerifyError as e:
        return LemmaCheck(name=name, passed=False, detail=str(e))


class LemmaSuite:
    """
    Auxiliary-lemma checks for one parameter triple.

    The grid and the A_0 eigenpairs are computed once and shared by every
    check; `run()` returns the aggregated report.
    """

    def __init__(self, p: ProblemParams, config: Optional[NumericConfig] = None):
        self.p = p
        self.config = config or NumericConfig()
        self.c: DerivedConstants = derive_constants(p)
        self.grid: LineGrid = build_grid(self.c, self.config.zero_tol, self.config)
        self.mu1 = float(p.n - 1)
        self._rng = np.random.default_rng(self.config.seed)

        spectrum, self.A0 = solve_mode_spectrum(self.c, self.grid, self.config)
        self.eigenvalues = spectrum.eigenvalues
        self.ground = spectrum.eigenfunctions[0]
        zero = [i for i, e in enumerate(self.eigenvalues) if abs(e) < self.config.zero_tol]
        self.zero_mode = spectrum.eigenfunctions[zero[0]] if zero else None

    def run(self) -> LemmaSuiteReport:
        checks: List[LemmaCheck] = []
        for name, fn in self._plan():
            checks.append(_guard(name, fn))
        if self.p.n == 3:
            checks.extend(potential_positivity_sweep())
        inconclusive = any(ch.inconclusive for ch in checks)
        passed = all(ch.passed for ch in checks if not (ch.inconclusive or ch.skipped))
        return LemmaSuiteReport(params=self.p, checks=checks, passed=passed,
                                inconclusive=inconclusive)

    def _plan(self):
        plan = [
            ("lemma3_constant", self.lemma3_constant),
            ("lemma3_mu1", self.lemma3_mu1),
            ("lemma3_mu0", self.lemma3_mu0),
            ("selfadjoint_random", self.selfadjoint_random),
            ("selfadjoint_V_ground", self.selfadjoint_V_ground),
            ("supersolution_closed", self.supersolution_closed),
            ("supersolution_fd_order", self.supersolution_fd_order),
            ("higher_mode_positivity", self.higher_mode),
            ("V_membership", self.v_membership),
            ("case_two_contradiction", lambda: case_two_contradiction(self.c, self.grid)),
            ("lemma4_positive_q", self.lemma4_positive),
            ("lemma4_decay_zero_mode", self.lemma4_decay_zero_mode),
            ("lemma4_decay_ground", self.lemma4_decay_ground),
            ("lemma4_decay_negative_control", self.lemma4_decay_negative),
            ("wronskian_constancy", self.wronskian_constancy),
            ("wronskian_order", self.wronskian_order),
            ("lemma5_dimension_A0", self.lemma5_A0),
            ("lemma5_dimension_mu1", self.lemma5_mu1),
        ]
        if self.p.is_boundary:
            plan.append(("translation_mode", lambda: translation_mode_check(
                self.c, self.grid, self.config.zero_tol, self.config.eig_tol)))
        return plan

    def _q(self, mu: float):
        return lambda t: np.asarray(potential_q(mu, t, self.c))

    # --- Lemma 3 ---

    def lemma3_constant(self) -> LemmaCheck:
        res = lemma3_minimize(constant_potential(1.0), self.grid, 1.0, self.config.eig_tol)
        ok = res.m > 1.0 and res.m_stretched < res.m and not res.localized
        return LemmaCheck(name="lemma3_constant", passed=ok, value=res.m,
                          detail=f"m={res.m:.8g} -> {res.m_stretched:.8g} on 1.5T, "
                                 f"mass fraction {res.mass_fraction:.4f}")

    def lemma3_mu1(self) -> LemmaCheck:
        res = lemma3_minimize(self._q(self.mu1), self.grid, self.mu1 + self.c.epsilon ** 2,
                              self.config.eig_tol)
        expected = theorem_margin(self.c, self.p.n)
        close = abs(res.m - expected) < 1e-4
        if self.p.is_boundary:
            ok = close and res.localized
        else:
            ok = close and res.m > 0.0
        return LemmaCheck(name="lemma3_mu1", passed=ok and res.dichotomy_holds, value=res.m,
                          detail=f"m={res.m:.8g}, oracle {expected:.8g}, localized={res.localized}")

    def lemma3_mu0(self) -> LemmaCheck:
        res = lemma3_minimize(self._q(0.0), self.grid, self.c.epsilon ** 2, self.config.eig_tol)
        ok = res.m < 0.0 and res.localized and res.dichotomy_holds
        return LemmaCheck(name="lemma3_mu0", passed=ok, value=res.m,
                          detail=f"m={res.m:.8g}, mass fraction {res.mass_fraction:.6f}")

    # --- self-adjointness ---

    def selfadjoint_random(self) -> LemmaCheck:
        u = self._rng.standard_normal(self.grid.N)
        v = self._rng.standard_normal(self.grid.N)
        gap = selfadjointness_check(self.A0, u, v)
        tol = selfadjointness_tolerance(self.A0, u, v)
        return LemmaCheck(name="selfadjoint_random", passed=gap <= tol, value=gap,
                          detail=f"tolerance {tol:.3e}")

    def selfadjoint_V_ground(self) -> LemmaCheck:
        A1 = self.A0.shifted(self.mu1)
        V = np.asarray(eval_V(self.grid.nodes, self.c))
        V = V / np.linalg.norm(V)
        gap = selfadjointness_check(A1, V, self.ground)
        tol = selfadjointness_tolerance(A1, V, self.ground)
        return LemmaCheck(name="selfadjoint_V_ground", passed=gap <= tol, value=gap,
                          detail=f"tolerance {tol:.3e}")

    # --- supersolution ---

    def supersolution_closed(self) -> LemmaCheck:
        rep = supersolution_check(self.c, self.grid, "closed")
        rhs = "vanishes" if rep.rhs_vanishes else f"min {rep.rhs_min:.3e}"
        return LemmaCheck(name="supersolution_closed", passed=rep.passed,
                          value=rep.residual.max_residual,
                          detail=f"relative residual {rep.residual.max_residual:.3e}, rhs {rhs}")

    def supersolution_fd_order(self) -> LemmaCheck:
        errors = [supersolution_check(self.c, LineGrid.from_half_width(10.0, h), "fd",
                                      tol=math.inf).residual.max_residual
                  for h in (0.02, 0.01)]
        ratio = error_ratios(errors)[0]
        return LemmaCheck(name="supersolution_fd_order", passed=3.2 <= ratio <= 4.8, value=ratio,
                          detail=f"residuals {errors[0]:.3e} -> {errors[1]:.3e}")

    def higher_mode(self) -> LemmaCheck:
        mu2 = float(2 * self.p.n)
        ok = higher_mode_positivity(self.c, self.grid, mu2)
        return LemmaCheck(name="higher_mode_positivity", passed=ok, value=mu2,
                          detail="(A_mu2 - A_mu1) V > 0 at every node")

    def v_membership(self) -> LemmaCheck:
        rep = V_membership_check(self.p, self.c, self.grid)
        return LemmaCheck(
            name="V_membership",
            passed=rep.consistent,
            inconclusive=rep.inconclusive,
            value=rep.fit.slope,
            detail=f"{rep.case.value}: fitted exponent {rep.fit.slope:.6g}, "
                   f"predicted {rep.predicted_exponent:.6g}",
        )

    # --- Lemma 4 ---

    def lemma4_positive(self) -> LemmaCheck:
        ok, q_min = potential_positivity_check(self.mu1, self.c)
        if not ok:
            return LemmaCheck(name="lemma4_positive_q", passed=False, skipped=True, value=q_min,
                              detail=f"not applicable: min q_(n-1) = {q_min:.6g} < 0")
        result = lemma4_positive_q(self.A0.shifted(self.mu1), self.config.eig_tol)
        return LemmaCheck(name="lemma4_positive_q", passed=result, value=q_min,
                          detail="q_(n-1) > 0 and lowest eigenvalue > 0")

    def _decay(self, name: str, phi: np.ndarray, A_limit: float, A_prime: float,
               q_values: np.ndarray, R0: Optional[float] = None, expect: bool = True) -> LemmaCheck:
        t_max = float(self.grid.nodes[resolved_tail(phi)])
        if R0 is None:
            R0 = decay_radius(q_values, self.grid, A_prime)
        if t_max <= R0:
            raise InconclusiveError(f"[{name}] tail resolved only up to t={t_max:.4g} <= R0={R0:.4g}")
        holds = lemma4_decay_bound(np.abs(phi), self.grid, A_limit, A_prime, R0=R0, t_max=t_max)
        return LemmaCheck(name=name, passed=holds == expect, value=A_prime,
                          detail=f"R0={R0:.4g}, bound {'holds' if holds else 'fails'} up to t={t_max:.4g}")

    def lemma4_decay_zero_mode(self) -> LemmaCheck:
        if self.zero_mode is None:
            raise InconclusiveError("[lemma4_decay_zero_mode] no zero mode")
        eps2 = self.c.epsilon ** 2
        return self._decay("lemma4_decay_zero_mode", self.zero_mode, eps2, 0.9 * eps2,
                           self.A0.potential)

    def lemma4_decay_ground(self) -> LemmaCheck:
        shift = self.c.epsilon ** 2 - self.eigenvalues[0]
        return self._decay("lemma4_decay_ground", self.ground, shift, 0.9 * shift,
                           self.A0.potential - self.eigenvalues[0])

    def lemma4_decay_negative(self) -> LemmaCheck:
        if self.zero_mode is None:
            raise InconclusiveError("[lemma4_decay_negative_control] no zero mode")
        eps2 = self.c.epsilon ** 2
        R0 = decay_radius(self.A0.potential, self.grid, 0.9 * eps2)
        return self._decay("lemma4_decay_negative_control", self.zero_mode, 3.0 * eps2,
                           2.0 * eps2, self.A0.potential, R0=R0, expect=False)

    # --- Lemma 5 ---

    def _wronskian(self, h: float):
        window = LineGrid.from_half_width(5.0, h)
        q0 = self._q(0.0)
        phi = ode_shoot(q0, window, 1.0, 0.0)
        psi = ode_shoot(q0, window, 0.0, 1.0)
        return lemma5_wronskian(phi, psi)

    def wronskian_constancy(self) -> LemmaCheck:
        drift, w = self._wronskian(self.config.h_max)
        ok = drift < 1e-8 * abs(w)
        return LemmaCheck(name="wronskian_constancy", passed=ok, value=drift,
                          detail=f"W={w:.6g}, max drift {drift:.3e}")

    def wronskian_order(self) -> LemmaCheck:
        """Passes when the drift shrinks at least like h^4 under h-halving."""
        coarse, _ = self._wronskian(0.05)
        fine, _ = self._wronskian(0.025)
        ratio = coarse / fine if fine > 0.0 else math.inf
        order = math.log2(ratio) if math.isfinite(ratio) else math.inf
        return LemmaCheck(name="wronskian_order", passed=ratio >= 11.2, value=order,
                          detail=f"drift {coarse:.3e} -> {fine:.3e} under h-halving, "
                                 f"ratio {ratio:.4g}, observed order {order:.3g}")

    def lemma5_A0(self) -> LemmaCheck:
        count = zero_band_count(self.A0, self.config.zero_tol)
        return LemmaCheck(name="lemma5_dimension_A0", passed=count == 1, value=count,
                          detail=f"{count} eigenvalue(s) of A_0 in the zero band")

    def lemma5_mu1(self) -> LemmaCheck:
        count = zero_band_count(self.A0.shifted(self.mu1), self.config.zero_tol)
        expected = 1 if self.p.is_boundary else 0
        return LemmaCheck(name="lemma5_dimension_mu1", passed=count == expected, value=count,
                          detail=f"{count} eigenvalue(s) of A_(n-1) in the zero band")


def run_lemma_suite(p: ProblemParams, config: Optional[NumericConfig] = None) -> LemmaSuiteReport:
    return LemmaSuite(p, config).run()
