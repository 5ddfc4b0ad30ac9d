from typing import List

import numpy as np
from scipy.linalg import eigh_tridiagonal

from hsverify.backend.operators.assembly import TridiagonalOperator
from hsverify.core.errors import InconclusiveError, ParameterError

# LAPACK-style safe minimum pivot
_PIVMIN = np.finfo(float).tiny ** 0.5


def eigen_count_below(A: TridiagonalOperator, x: float) -> int:
    """
    Number of eigenvalues of A strictly below x.

    Sylvester inertia of A - x*I read off the LDL^T pivots
    d_i = (a_i - x) - e^2 / d_(i-1). A vanishing pivot is replaced by
    -pivmin, as LAPACK's dstebz does, so the recurrence never breaks down.
    """
    e2 = A.offdiag * A.offdiag
    pivmin = _PIVMIN * max(1.0, e2)
    shifted = (A.diag - x).tolist()
    count = 0
    pivot = shifted[0]
    for i, a in enumerate(shifted):
        if i:
            pivot = a - e2 / pivot
        if abs(pivot) < pivmin:
            pivot = -pivmin
        if pivot < 0.0:
            count += 1
    return count


def lowest_eigenvalue(A: TridiagonalOperator, abs_tol: float = 1e-10) -> float:
    value = eigh_tridiagonal(
        A.diag, A.offdiag_array(), eigvals_only=True,
        select="i", select_range=(0, 0), lapack_driver="stebz", tol=abs_tol,
    )
    return float(value[0])


def eigenvalues_below(A: TridiagonalOperator, threshold: float,
                      abs_tol: float = 1e-10) -> List[float]:
    """
    All eigenvalues of A below `threshold`, each to absolute accuracy abs_tol.

    Brackets come from LAPACK bisection (stebz); the count is confirmed
    against the pivot count at the threshold.

    Raises:
        InconclusiveError: if the two counts disagree.
    """
    if abs_tol <= 0:
        raise ParameterError(f"[eigenvalues_below] abs_tol={abs_tol} must be > 0")
    expected = eigen_count_below(A, threshold)
    if expected == 0:
        return []

    lo, _ = A.gershgorin()
    values = eigh_tridiagonal(
        A.diag, A.offdiag_array(), eigvals_only=True,
        select="v", select_range=(lo - 1.0, threshold),
        lapack_driver="stebz", tol=abs_tol,
    )
    values = sorted(float(v) for v in values if v < threshold)
    if len(values) != expected:
        raise InconclusiveError(
            f"[eigenvalues_below] bisection found {len(values)} eigenvalues below "
            f"{threshold:.6g}, pivot count says {expected}")
    return values
