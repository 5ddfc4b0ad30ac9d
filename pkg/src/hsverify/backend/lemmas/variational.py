"""
Variational lemmas on a sampled potential q.

* Rayleigh minimization: either m > 0 or the infimum is attained (localized).
* Positive potentials carry no kernel.
* Kernel elements decay at least like C0 e^(-sqrt(A') t) beyond R0.
* At most one decaying solution of -phi'' + q phi = 0.
"""
from typing import Callable, List, Optional, Sequence, Tuple

import math
import numpy as np

from hsverify.backend.operators.assembly import (
    TridiagonalOperator, assemble_potential, potential_positivity_check
)
from hsverify.backend.operators.grid import LineGrid
from hsverify.backend.profiles.constants import derive_constants, validate_params
from hsverify.backend.spectral.eigvec import eigenfunction
from hsverify.backend.spectral.sturm import eigen_count_below, lowest_eigenvalue
from hsverify.core.errors import PreconditionError
from hsverify.core.models import LemmaCheck, MinimizationResult

PotentialFn = Callable[[np.ndarray], np.ndarray]


def _ground_state(A: TridiagonalOperator, abs_tol: float) -> Tuple[float, np.ndarray]:
    m = lowest_eigenvalue(A, abs_tol)
    return m, eigenfunction(A, m, abs_tol)


def _mass_inside(v: np.ndarray, grid: LineGrid, half_width: float) -> float:
    mass = v * v
    return float(np.sum(mass[grid.window(-half_width, half_width)]) / np.sum(mass))


def lemma3_minimize(q: PotentialFn, grid: LineGrid, A: float,
                    abs_tol: float = 1e-10, stretch: float = 1.5) -> MinimizationResult:
    """
    Discrete Rayleigh infimum of -d^2/dt^2 + q and whether it is attained.

    localized means more than 99% of the minimizer's mass sits in [-T/2, T/2]
    and that fraction moves by less than 1e-3 when T grows by `stretch`.
    """
    A_op = assemble_potential(q(grid.nodes), grid)
    m, v = _ground_state(A_op, abs_tol)
    fraction = _mass_inside(v, grid, grid.T / 2.0)

    far = grid.stretched(stretch)
    m_far, v_far = _ground_state(assemble_potential(q(far.nodes), far), abs_tol)
    fraction_far = _mass_inside(v_far, far, grid.T / 2.0)

    localized = fraction > 0.99 and abs(fraction - fraction_far) < 1e-3
    return MinimizationResult(
        m=m,
        m_stretched=m_far,
        localized=localized,
        mass_fraction=fraction,
        mass_fraction_stretched=fraction_far,
        dichotomy_holds=m > 0.0 or localized,
    )


def constant_potential(value: float) -> PotentialFn:
    return lambda t: np.full_like(np.asarray(t, dtype=float), value)


def selfadjointness_check(A: TridiagonalOperator, u: np.ndarray, v: np.ndarray) -> float:
    """|<Au, v> - <u, Av>|."""
    return abs(float(np.dot(A.matvec(u), v)) - float(np.dot(u, A.matvec(v))))


def selfadjointness_tolerance(A: TridiagonalOperator, u: np.ndarray, v: np.ndarray,
                              rel: float = 1e-12) -> float:
    """
    rel * ||A|| ||u|| ||v||, the rounding scale of the two inner products.

    ||A|| is the Gershgorin bound, about 4/h^2 on fine grids, so this is far
    looser than a bare rel * ||u|| ||v||, which rounding alone exceeds.
    """
    lo, hi = A.gershgorin()
    return rel * max(abs(lo), abs(hi)) * float(np.linalg.norm(u) * np.linalg.norm(v))


def lemma4_positive_q(A: TridiagonalOperator, abs_tol: float = 1e-10) -> bool:
    """
    With q >= 0 the lowest eigenvalue is positive, so there is no kernel.

    Raises:
        PreconditionError: if q takes a negative value on the grid.
    """
    q_min = float(np.min(A.potential))
    if q_min < 0.0:
        raise PreconditionError(f"[lemma4_positive_q] min q = {q_min:.6g} < 0")
    return lowest_eigenvalue(A, abs_tol) > 0.0


def decay_radius(q_values: np.ndarray, grid: LineGrid, A_prime: float) -> float:
    """Smallest node R0 >= 0 with q(t) > A' at every node t >= R0."""
    t = grid.nodes
    right = t >= 0.0
    bad = np.nonzero(right & (q_values <= A_prime))[0]
    if bad.size == 0:
        return 0.0
    last_bad = int(bad[-1])
    if last_bad + 1 >= grid.N:
        raise PreconditionError(f"[lemma4_decay_bound] q never stays above A'={A_prime:.6g}")
    return float(t[last_bad + 1])


def lemma4_decay_bound(phi: np.ndarray, grid: LineGrid, A_limit: float, A_prime: float,
                       R0: Optional[float] = None,
                       q_values: Optional[np.ndarray] = None,
                       t_max: Optional[float] = None) -> bool:
    """
    phi(t) <= C0 e^(-sqrt(A') t) at every node t >= R0, C0 = 2 phi(R0) e^(sqrt(A') R0).

    R0 defaults to the decay radius of q_values; t_max caps the checked
    range where phi is only resolved to rounding.

    Raises:
        PreconditionError: A' outside (0, A_limit), no way to pick R0, or phi
            not positive on [R0, T).
    """
    if not 0.0 < A_prime < A_limit:
        raise PreconditionError(
            f"[lemma4_decay_bound] need 0 < A'={A_prime:.6g} < A={A_limit:.6g}")
    if R0 is None:
        if q_values is None:
            raise PreconditionError("[lemma4_decay_bound] R0 or q_values required")
        R0 = decay_radius(q_values, grid, A_prime)

    t = grid.nodes
    tail = t >= R0
    if t_max is not None:
        tail &= t <= t_max
    values = np.asarray(phi)[tail]
    if values.size == 0 or np.any(values <= 0.0):
        raise PreconditionError(f"[lemma4_decay_bound] phi must be positive on [{R0:.6g}, T)")
    rate = math.sqrt(A_prime)
    t_tail = t[tail]
    # compare in log space; tails reach e^(-100)
    log_bound = math.log(2.0 * values[0]) - rate * (t_tail - t_tail[0])
    return bool(np.all(np.log(values) <= log_bound + 1e-12))


def lemma5_dimension_check(A: TridiagonalOperator, zero_tol: float) -> bool:
    """At most one eigenvalue in (-zero_tol, zero_tol)."""
    return zero_band_count(A, zero_tol) <= 1


def zero_band_count(A: TridiagonalOperator, zero_tol: float) -> int:
    # eigen_count_below is strict, so nudge the lower edge to exclude -zero_tol
    upper = eigen_count_below(A, zero_tol)
    lower = eigen_count_below(A, math.nextafter(-zero_tol, math.inf))
    return upper - lower


def potential_positivity_sweep(s_values: Sequence[float] = (1.5, 1.7, 1.9),
                               n: int = 3, gamma: float = 0.0) -> List[LemmaCheck]:
    """min q_(n-1) > 0 for each s; the n = 3, s >= 3/2 subcase."""
    checks = []
    for s in s_values:
        c = derive_constants(validate_params(n, s, gamma))
        ok, min_value = potential_positivity_check(float(n - 1), c)
        checks.append(LemmaCheck(
            name=f"potential_positivity[n={n},s={s:g}]",
            passed=ok,
            value=min_value,
            detail=f"min q_(n-1) = {min_value:.6g}",
        ))
    return checks
