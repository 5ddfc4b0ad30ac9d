from typing import Callable, Tuple

import numpy as np

from hsverify.backend.operators.grid import LineGrid
from hsverify.core.errors import ParameterError
from hsverify.core.models import OdeSolution

PotentialFn = Callable[[np.ndarray], np.ndarray]

OVERFLOW_CAP = 1e150


def _residual(values: np.ndarray, q_nodes: np.ndarray, h: float) -> float:
    """Max of |phi'' - q phi| with the 5-point fourth-order stencil, relative to max(1, |q phi|)."""
    if values.size < 5:
        return 0.0
    y = values
    d2 = (-y[:-4] + 16.0 * y[1:-3] - 30.0 * y[2:-2] + 16.0 * y[3:-1] - y[4:]) / (12.0 * h * h)
    qy = q_nodes[2:-2] * y[2:-2]
    scale = max(1.0, float(np.max(np.abs(qy))))
    return float(np.max(np.abs(d2 - qy))) / scale


def ode_shoot(q: PotentialFn, grid: LineGrid, y0: float, yp0: float) -> OdeSolution:
    """
    Classical RK4 for -phi'' + q phi = 0 from t = -T to t = T.

    Samples include both boundary points, so the solution has N + 2 entries.
    Once |phi| or |phi'| passes 1e150 the integration stops and the rest of
    the arrays is filled with the capped value.
    """
    h = grid.h
    t = h * np.arange(-(grid.M + 1), grid.M + 2, dtype=float)
    q_nodes = np.asarray(q(t), dtype=float)
    q_mid = np.asarray(q(t[:-1] + 0.5 * h), dtype=float)
    if q_nodes.shape != t.shape or q_mid.shape != (t.size - 1,):
        raise ParameterError("[ode_shoot] potential must map arrays to arrays of the same shape")

    y = np.empty_like(t)
    p = np.empty_like(t)
    y[0], p[0] = y0, yp0
    yi, pi = float(y0), float(yp0)
    half = 0.5 * h
    overflow = False
    valid = t.size
    qn = q_nodes.tolist()
    qm = q_mid.tolist()
    for j in range(t.size - 1):
        k1y, k1p = pi, qn[j] * yi
        k2y, k2p = pi + half * k1p, qm[j] * (yi + half * k1y)
        k3y, k3p = pi + half * k2p, qm[j] * (yi + half * k2y)
        k4y, k4p = pi + h * k3p, qn[j + 1] * (yi + h * k3y)
        yi += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        pi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        if abs(yi) > OVERFLOW_CAP or abs(pi) > OVERFLOW_CAP:
            overflow = True
            valid = j + 1
            y[j + 1:] = np.sign(yi) * OVERFLOW_CAP
            p[j + 1:] = np.sign(pi) * OVERFLOW_CAP
            break
        y[j + 1], p[j + 1] = yi, pi

    return OdeSolution(
        t=t,
        values=y,
        slopes=p,
        y0=y0,
        yp0=yp0,
        step=h,
        overflow=overflow,
        valid_length=valid,
        residual=_residual(y[:valid], q_nodes[:valid], h),
    )


def lemma5_wronskian(phi: OdeSolution, psi: OdeSolution) -> Tuple[float, float]:
    """
    (max drift, W(t_left)) of W = phi psi' - phi' psi.

    Overflow-flagged solutions are compared on their common untainted prefix.
    """
    if phi.t.shape != psi.t.shape or phi.step != psi.step:
        raise ParameterError("[lemma5_wronskian] solutions live on different grids")
    k = min(phi.valid_length, psi.valid_length)
    w = phi.values[:k] * psi.slopes[:k] - phi.slopes[:k] * psi.values[:k]
    return float(np.max(np.abs(w - w[0]))), float(w[0])
