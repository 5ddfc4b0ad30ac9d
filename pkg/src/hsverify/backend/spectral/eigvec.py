import numpy as np
from scipy.linalg import LinAlgError, solve_banded

from hsverify.backend.operators.assembly import TridiagonalOperator
from hsverify.core.errors import InconclusiveError, ParameterError

# inverse-iteration noise sits near 5e-10 of max|v|
RESOLVED_FLOOR = 1e-7


def normalize(v: np.ndarray, h: float) -> np.ndarray:
    """Discrete L^2 normalization h*sum(v^2) = 1, first entry of largest magnitude positive."""
    norm = np.sqrt(h * np.dot(v, v))
    if norm == 0.0:
        raise ParameterError("[normalize] zero vector")
    out = v / norm
    if out[int(np.argmax(np.abs(out)))] < 0.0:
        out = -out
    return out


def eigenfunction(A: TridiagonalOperator, eigenvalue: float,
                  abs_tol: float = 1e-10, max_iter: int = 20,
                  residual_tol: float = 1e-8) -> np.ndarray:
    """
    Eigenvector of A for an eigenvalue isolated to abs_tol.

    Shifted inverse iteration at eigenvalue - 10*abs_tol. The starting ramp
    has components of both parities, so odd and even states are reached.

    Raises:
        InconclusiveError: no convergence to ||Av - Ev|| <= residual_tol*||v||
            within max_iter solves.
    """
    shift = eigenvalue - 10.0 * abs_tol
    ab = A.banded(shift)
    v = np.linspace(1.0, 2.0, A.size)
    v /= np.linalg.norm(v)
    residual = np.inf
    for _ in range(max_iter):
        try:
            w = solve_banded((1, 1), ab, v, check_finite=False)
        except (LinAlgError, ValueError) as e:
            raise InconclusiveError(f"[eigenfunction] inverse iteration failed: {e}") from e
        v = w / np.linalg.norm(w)
        Av = A.matvec(v)
        rq = float(np.dot(v, Av))
        residual = float(np.linalg.norm(Av - rq * v))
        if residual <= residual_tol:
            return normalize(v, A.grid.h)
    raise InconclusiveError(
        f"[eigenfunction] no convergence near E={eigenvalue:.6g} after {max_iter} "
        f"iterations (residual {residual:.2e})")


def rayleigh_quotient(v: np.ndarray, A: TridiagonalOperator) -> float:
    """(v^T A v) / (v^T v)."""
    v = np.asarray(v, dtype=float)
    mass = float(np.dot(v, v))
    if mass == 0.0:
        raise ParameterError("[rayleigh_quotient] zero vector")
    return float(np.dot(v, A.matvec(v))) / mass


def sign_changes(v: np.ndarray, rel_floor: float = 1e-8) -> int:
    """Sign changes of v, ignoring entries below rel_floor * max|v|."""
    floor = rel_floor * float(np.max(np.abs(v)))
    signs = np.sign(v[np.abs(v) > floor])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def resolved_tail(v: np.ndarray, rel_floor: float = RESOLVED_FLOOR) -> int:
    """Last node index where |v| is above rel_floor * max|v|."""
    mag = np.abs(v)
    return int(np.nonzero(mag > rel_floor * float(np.max(mag)))[0][-1])
