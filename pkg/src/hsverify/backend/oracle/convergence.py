from typing import List, Optional, Sequence

import math
import numpy as np

from hsverify.backend.operators.assembly import assemble
from hsverify.backend.operators.grid import LineGrid, build_grid
from hsverify.backend.oracle.poschl_teller import oracle_spectrum
from hsverify.backend.spectral.sturm import eigenvalues_below
from hsverify.core.models import ConvergenceReport, ConvergenceStudy
from hsverify.core.params import DerivedConstants, NumericConfig


def observed_order(errors: Sequence[float], refinement: float = 2.0) -> float:
    """Mean log_refinement of successive error ratios."""
    ratios = [a / b for a, b in zip(errors[:-1], errors[1:]) if b > 0.0]
    if not ratios:
        return float("nan")
    return float(np.mean([math.log(r, refinement) for r in ratios]))


def error_ratios(errors: Sequence[float]) -> List[float]:
    return [a / b if b > 0.0 else float("inf") for a, b in zip(errors[:-1], errors[1:])]


def convergence_study(c: DerivedConstants, config: Optional[NumericConfig] = None,
                      steps: Sequence[float] = (0.04, 0.02, 0.01),
                      stretch: float = 1.5) -> ConvergenceStudy:
    """
    Discretization discipline of the A_0 eigenvalues.

    h-refinement: error of the discrete ground level against the oracle at
    each step; ratios should be 4 within 20%.
    Truncation: the kernel-relevant levels (at or below zero) at T and at
    stretch*T with the same spacing must agree to 0.01*zero_tol.
    """
    config = config or NumericConfig()
    oracle = oracle_spectrum(c)
    threshold = c.epsilon ** 2 - config.essential_gap
    base = build_grid(c, config.zero_tol, config)

    errors = []
    for h in steps:
        grid = LineGrid.from_half_width(base.T, h)
        levels = eigenvalues_below(assemble(0.0, grid, c), threshold, config.eig_tol)
        errors.append(abs(levels[0] - oracle.lowest))
    ratios = error_ratios(errors)
    h_report = ConvergenceReport(
        name="A_0 ground level vs oracle",
        steps=list(steps),
        errors=errors,
        ratios=ratios,
        observed_order=observed_order(errors),
        passed=all(3.2 <= r <= 4.8 for r in ratios),
    )

    relevant = config.zero_tol
    near = [e for e in eigenvalues_below(assemble(0.0, base, c), threshold, config.eig_tol)
            if e <= relevant]
    far_grid = base.stretched(stretch)
    far = [e for e in eigenvalues_below(assemble(0.0, far_grid, c), threshold, config.eig_tol)
           if e <= relevant]
    if len(near) == len(far):
        change = max((abs(a - b) for a, b in zip(near, far)), default=0.0)
    else:
        change = float("inf")
    tol = 0.01 * config.zero_tol
    return ConvergenceStudy(
        h_refinement=h_report,
        truncation_change=change,
        truncation_tol=tol,
        truncation_passed=change < tol,
    )
