from typing import Callable, Optional

import math
import numpy as np
from scipy.integrate import simpson, trapezoid
from scipy.special import gamma as gamma_fn

from hsverify.core.errors import QuadratureError
from hsverify.core.params import QuadratureSpec


def sphere_area(n: int) -> float:
    """Area of S^(n-1) = 2 pi^(n/2) / Gamma(n/2)."""
    return 2.0 * math.pi ** (n / 2.0) / float(gamma_fn(n / 2.0))


def integrate(f: Callable[[np.ndarray], np.ndarray], a: float, b: float,
              spec: Optional[QuadratureSpec] = None) -> float:
    """
    Composite rule with interval doubling and Richardson extrapolation.

    Stops when two successive extrapolated values differ by less than
    refinement_target relative to the latest one.

    Raises:
        QuadratureError: if max_levels doublings do not converge.
    """
    spec = spec or QuadratureSpec()
    if b <= a:
        return 0.0
    rule = simpson if spec.rule == "simpson" else trapezoid
    # error ratio per halving: 2^4 for Simpson, 2^2 for the trapezoid
    factor = 15.0 if spec.rule == "simpson" else 3.0

    intervals = spec.initial_intervals + spec.initial_intervals % 2
    previous_raw: Optional[float] = None
    previous: Optional[float] = None
    for _ in range(spec.max_levels):
        x = np.linspace(a, b, intervals + 1)
        raw = float(rule(f(x), x=x))
        if previous_raw is not None:
            value = raw + (raw - previous_raw) / factor
            if previous is not None:
                diff = abs(value - previous)
                if diff == 0.0 or diff <= spec.refinement_target * abs(value):
                    return value
            previous = value
        previous_raw = raw
        intervals *= 2
    raise QuadratureError(
        f"[integrate] no convergence on [{a:.6g}, {b:.6g}] after {spec.max_levels} levels "
        f"(target {spec.refinement_target:g})")
