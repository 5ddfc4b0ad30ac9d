from typing import Optional

import math
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from hsverify.core.errors import InconclusiveError, ParameterError
from hsverify.core.params import DerivedConstants, NumericConfig

# Resolution the default zero_tol was calibrated against.
_REFERENCE_ZERO_TOL = 5e-5


class LineGrid(BaseModel):
    """
    Uniform grid on (-T, T) with Dirichlet ends at ±T.

    Stored as spacing h and half count M; nodes are h*i for i = -M..M, so the
    node set is symmetric bit for bit and t = 0 is always the middle node.
    """
    h: float = Field(gt=0)
    M: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)

    @property
    def N(self) -> int:
        return 2 * self.M + 1

    @property
    def T(self) -> float:
        return self.h * (self.M + 1)

    @property
    def center(self) -> int:
        return self.M

    @property
    def nodes(self) -> np.ndarray:
        return self.h * np.arange(-self.M, self.M + 1, dtype=float)

    def mirror(self, values: np.ndarray) -> np.ndarray:
        """values(-t) sampled on the same nodes."""
        return values[::-1]

    def window(self, t_lo: float, t_hi: float) -> np.ndarray:
        """Boolean mask of the nodes inside [t_lo, t_hi]."""
        t = self.nodes
        return (t >= t_lo) & (t <= t_hi)

    def stretched(self, factor: float) -> "LineGrid":
        """Same spacing, half-width scaled by `factor`."""
        return LineGrid(h=self.h, M=int(round((self.M + 1) * factor)) - 1)

    @classmethod
    def from_half_width(cls, T: float, h_max: float) -> "LineGrid":
        if T <= 0 or h_max <= 0:
            raise ParameterError(f"[LineGrid] T={T} and h_max={h_max} must be > 0")
        cells = max(2, math.ceil(T / h_max - 1e-9))
        return cls(h=T / cells, M=cells - 1)


def default_half_width(c: DerivedConstants, zero_tol: float) -> float:
    """
    T = max(40, 10/eps, 8/(beta*eps), log(100/zero_tol)/(2 eps)).

    The last term keeps e^(-2 eps T) below 0.01*zero_tol; 8/(beta*eps) keeps
    the tail windows in the region where tanh(beta*eps*t) is 1 to 1e-3.
    """
    eps = c.epsilon
    return max(40.0, 10.0 / eps, 8.0 / c.scale,
               math.log(100.0 / zero_tol) / (2.0 * eps))


def build_grid(c: DerivedConstants, zero_tol: float,
               config: Optional[NumericConfig] = None) -> LineGrid:
    """
    Resolution grid for the mode operators of (n, s, gamma).

    The spacing shrinks like sqrt(zero_tol) below the reference tolerance so
    the O(h^2) eigenvalue error stays inside the zero band.

    Raises:
        InconclusiveError: if the grid would exceed config.max_nodes.
    """
    if zero_tol <= 0:
        raise ParameterError(f"[build_grid] zero_tol={zero_tol} must be > 0")
    config = config or NumericConfig()

    T = config.T if config.T is not None else default_half_width(c, zero_tol)
    h_target = config.h_max * min(1.0, math.sqrt(zero_tol / _REFERENCE_ZERO_TOL))

    cells = math.ceil(T / h_target - 1e-9)
    nodes = 2 * cells - 1
    if nodes > config.max_nodes:
        raise InconclusiveError(
            f"[build_grid] inconclusive at this precision: {nodes} nodes needed "
            f"(T={T:.4g}, h={h_target:.3g}) but max_nodes={config.max_nodes}")
    return LineGrid.from_half_width(T, h_target)
