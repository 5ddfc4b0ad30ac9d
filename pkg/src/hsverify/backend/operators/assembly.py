"""
Finite-difference mode operators.

A_mu = -d^2/dt^2 + q_mu(t),  q_mu = mu + eps^2 - (2*(s)-1) lambda U_hat^(2*(s)-2)

discretized with the 3-point stencil and Dirichlet ends at ±T.
"""
from typing import Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from hsverify.backend.operators.grid import LineGrid
from hsverify.backend.profiles.functions import log_u_hat
from hsverify.core.errors import ParameterError
from hsverify.core.params import DerivedConstants

ArrayLike = Union[float, np.ndarray]


class TridiagonalOperator(BaseModel):
    """Symmetric tridiagonal matrix with constant off-diagonal -1/h^2."""
    diag: np.ndarray
    offdiag: float
    mu: float
    grid: LineGrid

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    def model_post_init(self, __context) -> None:
        if self.diag.shape != (self.grid.N,):
            raise ParameterError(
                f"[TridiagonalOperator] diag has shape {self.diag.shape}, grid has N={self.grid.N}")
        self.diag.setflags(write=False)

    @property
    def size(self) -> int:
        return self.grid.N

    @property
    def potential(self) -> np.ndarray:
        """q sampled at the nodes (diag minus the stencil centre)."""
        return self.diag - 2.0 / self.grid.h ** 2

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.offdiag * v[1:]
        out[1:] += self.offdiag * v[:-1]
        return out

    def offdiag_array(self) -> np.ndarray:
        return np.full(self.size - 1, self.offdiag)

    def banded(self, shift: float = 0.0) -> np.ndarray:
        """(3, N) upper-form band storage of A - shift*I for scipy.linalg.solve_banded."""
        ab = np.zeros((3, self.size))
        ab[0, 1:] = self.offdiag
        ab[1, :] = self.diag - shift
        ab[2, :-1] = self.offdiag
        return ab

    def gershgorin(self) -> Tuple[float, float]:
        radius = 2.0 * abs(self.offdiag)
        return float(np.min(self.diag) - radius), float(np.max(self.diag) + radius)

    def shifted(self, mu: float) -> "TridiagonalOperator":
        """A_(self.mu + mu): the same matrix plus mu on the diagonal."""
        return TridiagonalOperator(diag=self.diag + mu, offdiag=self.offdiag,
                                   mu=self.mu + mu, grid=self.grid)


def well_profile(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """U_hat^(2*(s)-2), which equals sech^2(beta*eps*t)/4."""
    t_arr = np.asarray(t, dtype=float)
    out = np.exp((c.two_star_s - 2.0) * np.asarray(log_u_hat(t_arr, c)))
    return float(out) if np.ndim(t) == 0 else out


def potential_q(mu: float, t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    base = c.epsilon ** 2 - c.well_coefficient * np.asarray(well_profile(t, c))
    out = base + mu
    return float(out) if np.ndim(t) == 0 else out


def assemble(mu: float, grid: LineGrid, c: DerivedConstants) -> TridiagonalOperator:
    base = assemble_potential(
        np.asarray(potential_q(0.0, grid.nodes, c)), grid)
    if mu == 0.0:
        return base
    return base.shifted(mu)


def assemble_potential(q_values: np.ndarray, grid: LineGrid,
                       mu: Optional[float] = None) -> TridiagonalOperator:
    """Operator -d^2/dt^2 + q for an arbitrary sampled potential."""
    q = np.asarray(q_values, dtype=float)
    if q.shape != (grid.N,):
        raise ParameterError(
            f"[assemble_potential] expected {grid.N} potential samples, got {q.shape}")
    inv_h2 = 1.0 / grid.h ** 2
    return TridiagonalOperator(diag=2.0 * inv_h2 + q, offdiag=-inv_h2,
                               mu=0.0 if mu is None else mu, grid=grid)


def potential_positivity_check(mu: float, c: DerivedConstants) -> Tuple[bool, float]:
    """
    Is q_mu > 0 on the whole line?

    The well is deepest at t = 0 (sech^2 peaks there), so the minimum is
    q_mu(0) = mu + eps^2 - (2*(s)-1) lambda U_hat(0)^(2*(s)-2).
    """
    min_value = float(potential_q(mu, 0.0, c))
    return min_value > 0.0, min_value
