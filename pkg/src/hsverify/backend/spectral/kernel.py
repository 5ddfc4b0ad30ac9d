"""
Kernel accounting over the sphere modes.

spec(A_mu) = spec(A_0) + mu exactly, so one A_0 solve decides every mode:
A_mu has kernel iff A_0 has the eigenvalue -mu.
"""
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import linregress

from hsverify.backend.operators.assembly import TridiagonalOperator, assemble
from hsverify.backend.operators.grid import LineGrid, build_grid
from hsverify.backend.oracle.poschl_teller import (
    oracle_cross_check, oracle_ground_state, oracle_spectrum, theorem_margin
)
from hsverify.backend.profiles.constants import classify_case, derive_constants
from hsverify.backend.profiles.functions import eval_Z_hat
from hsverify.backend.profiles.sphere import sphere_modes
from hsverify.backend.spectral.eigvec import (
    RESOLVED_FLOOR, eigenfunction, normalize, resolved_tail, sign_changes
)
from hsverify.backend.spectral.sturm import eigenvalues_below
from hsverify.core.errors import InconclusiveError, ParameterError
from hsverify.core.models import (
    DecayFit, GridInfo, KernelReport, ModeKernel, ModeSpectrum, Verdict,
    ZeroModeDiagnostics
)
from hsverify.core.params import DerivedConstants, NumericConfig, ProblemParams


def classify_eigenvalues(eigenvalues: Sequence[float], zero_tol: float,
                         separation: float) -> Tuple[int, float, bool]:
    """
    (dim, margin, inconclusive) for a list of eigenvalues.

    dim counts eigenvalues in (-zero_tol, zero_tol); margin is the distance
    from 0 to the nearest one outside that band; inconclusive flags any
    eigenvalue with zero_tol <= |E| < separation.
    """
    if zero_tol >= separation:
        raise ParameterError(
            f"[kernel_dimension] zero_tol={zero_tol} must be below separation={separation}")
    dim = 0
    margin = float("inf")
    inconclusive = False
    for e in eigenvalues:
        a = abs(e)
        if a < zero_tol:
            dim += 1
            continue
        margin = min(margin, a)
        if a < separation:
            inconclusive = True
    return dim, margin, inconclusive


def kernel_dimension(A: TridiagonalOperator, zero_tol: float, separation: float,
                     abs_tol: float = 1e-10, essential_gap: float = 1e-6,
                     epsilon: Optional[float] = None) -> Tuple[int, float]:
    """
    Kernel dimension of one discretized mode operator.

    Eigenvalues are searched below the essential threshold, taken as
    mu + eps^2 when epsilon is given and as the limit of the potential at the
    grid ends otherwise.

    Raises:
        InconclusiveError: if an eigenvalue sits in the gray band [zero_tol, separation).
    """
    if epsilon is not None:
        threshold = A.mu + epsilon ** 2 - essential_gap
    else:
        q = A.potential
        threshold = float(min(q[0], q[-1])) - essential_gap
    eigs = eigenvalues_below(A, threshold, abs_tol)
    dim, margin, inconclusive = classify_eigenvalues(eigs, zero_tol, separation)
    if inconclusive:
        raise InconclusiveError(
            f"[kernel_dimension] mu={A.mu:g}: eigenvalue within [{zero_tol:g}, {separation:g}) of 0 "
            f"(eigenvalues {[round(e, 8) for e in eigs]})")
    return dim, margin


def solve_mode_spectrum(c: DerivedConstants, grid: LineGrid,
                        config: NumericConfig) -> Tuple[ModeSpectrum, TridiagonalOperator]:
    """Discrete spectrum of A_0 below eps^2 with all eigenfunctions."""
    A0 = assemble(0.0, grid, c)
    threshold = c.epsilon ** 2 - config.essential_gap
    eigs = eigenvalues_below(A0, threshold, config.eig_tol)
    vectors = [eigenfunction(A0, e, config.eig_tol) for e in eigs]
    return ModeSpectrum(mu=0.0, essential_threshold=c.epsilon ** 2,
                        eigenvalues=eigs, eigenfunctions=vectors), A0


def fit_decay(t: np.ndarray, values: np.ndarray, t_lo: float, t_hi: float,
              rel_floor: float = 1e-10, min_points: int = 20) -> DecayFit:
    """Least-squares slope of log|values| over [t_lo, t_hi], cut where |values| drops below rel_floor*max."""
    mag = np.abs(values)
    mask = (t >= t_lo) & (t <= t_hi) & (mag > rel_floor * float(np.max(mag)))
    if np.count_nonzero(mask) < min_points:
        raise InconclusiveError(
            f"[fit_decay] fewer than {min_points} usable nodes in [{t_lo:.4g}, {t_hi:.4g}]")
    fit = linregress(t[mask], np.log(mag[mask]))
    window = [float(t[mask][0]), float(t[mask][-1])]
    return DecayFit(window=window, slope=float(fit.slope), correlation=float(fit.rvalue))


def decay_window(t: np.ndarray, values: np.ndarray, T: float,
                 rel_floor: float = RESOLVED_FLOOR, min_points: int = 20) -> Tuple[float, float]:
    """
    Right-tail fit window [t_lo, t_hi] for an eigenfunction on [-T, T].

    t_hi is 3T/4 or the last node above rel_floor*max|values|, whichever
    comes first. t_lo is T/2 when that leaves min_points nodes, else t_hi/2.
    """
    t_last = float(t[resolved_tail(values, rel_floor)])
    t_hi = min(0.75 * T, t_last)
    t_lo = T / 2.0
    if np.count_nonzero((t >= t_lo) & (t <= t_hi)) < min_points:
        t_lo = 0.5 * t_hi
    return t_lo, t_hi


def zero_mode_diagnostics(c: DerivedConstants, grid: LineGrid, spectrum: ModeSpectrum,
                          zero_tol: float) -> Optional[ZeroModeDiagnostics]:
    """
    Identify the near-zero eigenfunction of A_0 with the scaling direction -U_hat'.

    The tail slope is compared with the slope of Z_hat fitted on the same
    nodes, which tends to -eps once the window leaves the core.
    Returns None when A_0 has no eigenvalue in the zero band.
    """
    candidates = [i for i, e in enumerate(spectrum.eigenvalues) if abs(e) < zero_tol]
    if not candidates:
        return None
    idx = candidates[0]
    v = spectrum.eigenfunctions[idx]
    t = grid.nodes
    z = normalize(np.asarray(eval_Z_hat(t, c)), grid.h)

    # sign-fixed vectors agree up to one global sign
    l2_error = float(np.sqrt(grid.h) * min(np.linalg.norm(v - z), np.linalg.norm(v + z)))
    parity_defect = float(np.max(np.abs(v + grid.mirror(v))))
    changes = sign_changes(v)
    ground = spectrum.eigenfunctions[0]
    ground_changes = sign_changes(ground) if idx > 0 else changes
    sech = normalize(np.asarray(oracle_ground_state(oracle_spectrum(c), t)), grid.h)
    ground_l2_error = float(np.sqrt(grid.h) * np.linalg.norm(normalize(ground, grid.h) - sech))

    t_lo, t_hi = decay_window(t, v, grid.T)
    decay = fit_decay(t, v, t_lo, t_hi, rel_floor=RESOLVED_FLOOR)
    reference = fit_decay(t, z, *decay.window, rel_floor=0.0)
    decay = DecayFit(window=decay.window, slope=decay.slope, correlation=decay.correlation,
                     reference_slope=reference.slope)
    passed = (
        l2_error < 1e-3
        and ground_l2_error < 1e-3
        and parity_defect < 1e-6
        and changes == 1
        and ground_changes == 0
        and idx == 1
        and abs(decay.slope - reference.slope) <= 0.02 * c.epsilon
    )
    return ZeroModeDiagnostics(
        eigenvalue=spectrum.eigenvalues[idx],
        l2_error=l2_error,
        ground_l2_error=ground_l2_error,
        parity_defect=parity_defect,
        sign_changes=changes,
        ground_sign_changes=ground_changes,
        decay=decay,
        passed=passed,
    )


def mode_kernels(p: ProblemParams, spectrum: ModeSpectrum, config: NumericConfig) -> List[ModeKernel]:
    """
    Per-mode kernel rows derived from the A_0 spectrum by the shift law.

    mu_0 and mu_1 are always listed; higher modes only while
    mu_k <= -lambda_min(A_0) + separation, since beyond that every eigenvalue
    of A_mu_k exceeds the separation.
    """
    lowest = spectrum.eigenvalues[0]
    oracle_low = oracle_spectrum(derive_constants(p)).lowest
    rows = []
    for mode in sphere_modes(p.n, config.k_max):
        if mode.k > 1 and mode.mu > -lowest + config.separation:
            break
        shifted = spectrum.shifted(mode.mu)
        dim, margin, inconclusive = classify_eigenvalues(
            shifted.eigenvalues, config.zero_tol, config.separation)
        rows.append(ModeKernel(
            mode=mode,
            kernel_dim=dim,
            margin=margin,
            lowest_eigenvalue=shifted.eigenvalues[0],
            oracle_lowest=oracle_low + mode.mu,
            inconclusive=inconclusive,
        ))
    return rows


def decide_verdict(p: ProblemParams, rows: Sequence[ModeKernel], separation: float) -> Tuple[int, Verdict]:
    total = sum(r.mode.multiplicity * r.kernel_dim for r in rows)
    if any(r.inconclusive for r in rows):
        return total, Verdict.INCONCLUSIVE
    margins_ok = all(r.margin >= separation for r in rows)
    if p.is_boundary:
        ok = total == p.n + 1 and margins_ok
        return total, Verdict.BOUNDARY_DIM_N_PLUS_1 if ok else Verdict.VIOLATION
    ok = total == 1 and margins_ok
    return total, Verdict.VERIFIED_DIM_1 if ok else Verdict.VIOLATION


def total_kernel_dimension(p: ProblemParams, config: Optional[NumericConfig] = None) -> KernelReport:
    """
    Kernel of the linearized operator, counted mode by mode with multiplicities.

    Raises:
        InconclusiveError: when the grid cannot be built at the requested precision
            or the eigen-solvers disagree.
    """
    config = config or NumericConfig()
    c = derive_constants(p)
    grid = build_grid(c, config.zero_tol, config)
    spectrum, _ = solve_mode_spectrum(c, grid, config)
    if not spectrum.eigenvalues:
        raise InconclusiveError(f"[total_kernel_dimension] {p.label()}: A_0 has no bound state")

    rows = mode_kernels(p, spectrum, config)
    total, verdict = decide_verdict(p, rows, config.separation)

    oracle = oracle_spectrum(c)
    check = oracle_cross_check(c, spectrum, separation=config.separation)
    zero_mode = zero_mode_diagnostics(c, grid, spectrum, config.zero_tol)

    notes = []
    if not check.passed:
        notes.append(f"oracle cross-check failed (max gap {check.max_gap:.3e})")
    if zero_mode is None:
        notes.append("A_0 has no eigenvalue in the zero band")
    elif not zero_mode.passed:
        notes.append("zero mode does not match the scaling direction")

    return KernelReport(
        params=p,
        epsilon=c.epsilon,
        lam=c.lam,
        case=classify_case(p),
        grid=GridInfo(T=grid.T, h=grid.h, N=grid.N),
        per_mode=rows,
        total_dim=total,
        verdict=verdict,
        zero_tol=config.zero_tol,
        separation=config.separation,
        lowest_eigenvalue=spectrum.eigenvalues[0],
        oracle_lowest=oracle.lowest,
        theorem_margin_numeric=spectrum.eigenvalues[0] + (p.n - 1),
        theorem_margin_oracle=theorem_margin(c, p.n),
        oracle_check=check,
        zero_mode=zero_mode,
        notes=notes,
    )
