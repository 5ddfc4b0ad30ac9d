"""
Closed-form oracle for the spectrum of A_0.

With x = beta*eps*t the well of A_0 is (2*(s)-1) lambda sech^2(x)/4, so
(beta*eps)^-2 (A_0 - eps^2) is the sech^2 operator -d^2/dx^2 - l(l+1) sech^2 x
with l = (n-s)/(2-s). Its bound states sit at -(l-k)^2 for integers 0 <= k < l.
"""
from typing import List, Union

import math
import numpy as np

from hsverify.core.errors import VerificationFailure
from hsverify.core.models import ModeSpectrum, OracleCheck, OracleSpectrum
from hsverify.core.params import DerivedConstants

ArrayLike = Union[float, np.ndarray]


def oracle_spectrum(c: DerivedConstants) -> OracleSpectrum:
    eps2 = c.epsilon ** 2
    levels: List[float] = []
    k = 0
    while k < c.ell:
        b = c.beta * (c.ell - k)
        # eps^2 (1 - b)(1 + b): exact zero at k = 1 where b = 1
        levels.append(eps2 * (1.0 - b) * (1.0 + b))
        k += 1
    return OracleSpectrum(
        ell=c.ell,
        scale=c.scale,
        epsilon=c.epsilon,
        well_depth=c.well_coefficient / (4.0 * c.scale ** 2),
        levels=levels,
        margin=levels[0] + (c.n - 1),
    )


def well_depth_closed_form(n: int, s: float) -> float:
    """(n+2-2s)(n-s)/(2-s)^2, which must equal l(l+1)."""
    return (n + 2.0 - 2.0 * s) * (n - s) / (2.0 - s) ** 2


def theorem_margin(c: DerivedConstants, n: int) -> float:
    """
    (n-1) - eps^2 (((n-s)/(n-2))^2 - 1), the oracle E_0 + (n-1).

    Positive iff no sphere mode with mu >= n-1 carries kernel; zero at
    gamma = s = 0.
    """
    ratio = (n - c.s) / (n - 2)
    return (n - 1) - c.epsilon ** 2 * (ratio - 1.0) * (ratio + 1.0)


def oracle_ground_state(spectrum: OracleSpectrum, t: ArrayLike) -> ArrayLike:
    """sech^l(beta*eps*t), unnormalized."""
    ax = np.abs(spectrum.scale * np.asarray(t, dtype=float))
    log_sech = -(ax + np.log1p(np.exp(-2.0 * ax)) - math.log(2.0))
    out = np.exp(spectrum.ell * log_sech)
    return float(out) if np.ndim(t) == 0 else out


def oracle_cross_check(c: DerivedConstants, discrete: ModeSpectrum,
                       tol: float = 1e-4, separation: float = 1e-2,
                       strict: bool = False) -> OracleCheck:
    """
    Compare the discrete A_0 spectrum with the oracle levels.

    Levels are compared below eps^2 - separation. A level of either list
    lying within `tol` of that cut may appear on one side only without
    counting as a mismatch.

    Raises:
        VerificationFailure: on mismatch, only when strict.
    """
    oracle = oracle_spectrum(c)
    cut = c.epsilon ** 2 - separation
    ref = [e for e in oracle.levels if e < cut]
    got = [e for e in discrete.eigenvalues if e < cut]

    paired = min(len(ref), len(got))
    gaps = [abs(got[i] - ref[i]) for i in range(paired)]
    unmatched = ref[paired:] + got[paired:]
    counts_ok = all(abs(e - cut) <= tol for e in unmatched)

    max_gap = max(gaps) if gaps else 0.0
    passed = counts_ok and max_gap <= tol
    if strict and not passed:
        worst = int(np.argmax(gaps)) if gaps else paired
        raise VerificationFailure(
            f"[oracle_cross_check] level {worst}: discrete {got[:paired + 1]} vs oracle "
            f"{ref[:paired + 1]} (max gap {max_gap:.3e}, counts {len(got)}/{len(ref)})")
    return OracleCheck(
        discrete=got, oracle=ref, gaps=gaps, max_gap=max_gap,
        count_discrete=len(got), count_oracle=len(ref), tol=tol, passed=passed,
    )
