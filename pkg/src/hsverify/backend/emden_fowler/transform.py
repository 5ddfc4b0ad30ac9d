"""
Radial test functions and the Emden-Fowler hat transform

    u_hat(t) = e^(-(n-2)t/2) u(e^(-t)),   r = e^(-t).
"""
from typing import Callable, Optional, Tuple, Union

import math
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from hsverify.backend.profiles.functions import eval_U, eval_U_prime
from hsverify.core.errors import ParameterError
from hsverify.core.params import DerivedConstants

ArrayLike = Union[float, np.ndarray]
RadialMap = Callable[[np.ndarray], np.ndarray]


class RadialTestFunction(BaseModel):
    """
    A radial function u(r), identically zero outside [r_lo, r_hi].

    The evaluators are called on arrays of radii strictly inside the support;
    masking to zero outside is done here.
    """
    evaluator: RadialMap
    derivative_evaluator: RadialMap
    second_derivative_evaluator: Optional[RadialMap] = None
    support: Tuple[float, float]
    label: str = "u"

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @model_validator(mode="after")
    def _check_support(self) -> "RadialTestFunction":
        r_lo, r_hi = self.support
        if not 0.0 < r_lo < r_hi:
            raise ValueError(f"support {self.support} must satisfy 0 < r_lo < r_hi")
        return self

    @property
    def t_support(self) -> Tuple[float, float]:
        """Image of the support under t = -log r."""
        r_lo, r_hi = self.support
        return -math.log(r_hi), -math.log(r_lo)

    def inside(self, r: np.ndarray) -> np.ndarray:
        r_lo, r_hi = self.support
        return (r >= r_lo) & (r <= r_hi)

    def _masked(self, fn: Optional[RadialMap], r: ArrayLike) -> ArrayLike:
        if fn is None:
            raise ParameterError(f"[RadialTestFunction] {self.label}: derivative not available")
        r_arr = np.atleast_1d(np.asarray(r, dtype=float))
        out = np.zeros_like(r_arr)
        mask = self.inside(r_arr)
        if np.any(mask):
            out[mask] = fn(r_arr[mask])
        return float(out[0]) if np.ndim(r) == 0 else out

    def value(self, r: ArrayLike) -> ArrayLike:
        return self._masked(self.evaluator, r)

    def derivative(self, r: ArrayLike) -> ArrayLike:
        return self._masked(self.derivative_evaluator, r)

    def second_derivative(self, r: ArrayLike) -> ArrayLike:
        return self._masked(self.second_derivative_evaluator, r)

    def scaled(self, factor: float) -> "RadialTestFunction":
        second = self.second_derivative_evaluator
        return RadialTestFunction(
            evaluator=lambda r: factor * self.evaluator(r),
            derivative_evaluator=lambda r: factor * self.derivative_evaluator(r),
            second_derivative_evaluator=None if second is None else (lambda r: factor * second(r)),
            support=self.support,
            label=f"{factor:g}*{self.label}",
        )


def hat_transform(u: RadialTestFunction, t: ArrayLike, n: int) -> ArrayLike:
    t_arr = np.asarray(t, dtype=float)
    out = np.exp(-(n - 2) / 2.0 * t_arr) * np.asarray(u.value(np.exp(-t_arr)))
    return float(out) if np.ndim(t) == 0 else out


def hat_derivative(u: RadialTestFunction, t: ArrayLike, n: int) -> ArrayLike:
    """u_hat'(t) = -a u_hat - e^(-a t) r u'(r),  a = (n-2)/2."""
    a = (n - 2) / 2.0
    t_arr = np.asarray(t, dtype=float)
    r = np.exp(-t_arr)
    g = np.exp(-a * t_arr)
    out = -a * g * np.asarray(u.value(r)) - g * r * np.asarray(u.derivative(r))
    return float(out) if np.ndim(t) == 0 else out


# --- TEST FUNCTION FAMILIES ---


def zero_function(support: Tuple[float, float] = (0.5, 2.0)) -> RadialTestFunction:
    return RadialTestFunction(
        evaluator=np.zeros_like,
        derivative_evaluator=np.zeros_like,
        second_derivative_evaluator=np.zeros_like,
        support=support,
        label="0",
    )


def radial_bump(center: float, half_width: float, amplitude: float = 1.0,
                power: int = 4) -> RadialTestFunction:
    """A (1 - ((r - c)/w)^2)^p on |r - c| < w, with exact first and second derivatives."""
    if half_width <= 0 or center - half_width <= 0:
        raise ParameterError(
            f"[radial_bump] need 0 < center - half_width, got c={center}, w={half_width}")
    if power < 3:
        raise ParameterError(f"[radial_bump] power={power} must be >= 3 for C^2 matching")
    c, w, A, p = center, half_width, amplitude, power

    def value(r: np.ndarray) -> np.ndarray:
        x = (r - c) / w
        return A * (1.0 - x * x) ** p

    def first(r: np.ndarray) -> np.ndarray:
        x = (r - c) / w
        return A * p * (1.0 - x * x) ** (p - 1) * (-2.0 * x / w)

    def second(r: np.ndarray) -> np.ndarray:
        x = (r - c) / w
        g = 1.0 - x * x
        return A * (-2.0 * p / w ** 2) * (g ** (p - 1) - 2.0 * (p - 1) * x * x * g ** (p - 2))

    return RadialTestFunction(
        evaluator=value,
        derivative_evaluator=first,
        second_derivative_evaluator=second,
        support=(c - w, c + w),
        label=f"bump(c={c:g},w={w:g},A={A:g},p={p})",
    )


def random_bumps(rng: np.random.Generator, count: int = 10) -> list:
    bumps = []
    for _ in range(count):
        center = float(rng.uniform(1.0, 3.0))
        half_width = float(rng.uniform(0.2, 0.9))
        amplitude = float(rng.uniform(0.5, 2.0))
        bumps.append(radial_bump(center, half_width, amplitude))
    return bumps


def power_profile(n: int, r_lo: float = 0.5, r_hi: float = 2.0) -> RadialTestFunction:
    """u(r) = r^(-(n-2)/2) on [r_lo, r_hi]; its hat transform is 1 there."""
    a = (n - 2) / 2.0
    return RadialTestFunction(
        evaluator=lambda r: r ** (-a),
        derivative_evaluator=lambda r: -a * r ** (-a - 1.0),
        second_derivative_evaluator=lambda r: a * (a + 1.0) * r ** (-a - 2.0),
        support=(r_lo, r_hi),
        label=f"r^-{a:g}",
    )


def extremal_profile(c: DerivedConstants, t_half_width: float = 30.0) -> RadialTestFunction:
    """The extremal U itself, cut off at r = e^(±t_half_width)."""
    return RadialTestFunction(
        evaluator=lambda r: np.asarray(eval_U(r, c)),
        derivative_evaluator=lambda r: np.asarray(eval_U_prime(r, c)),
        support=(math.exp(-t_half_width), math.exp(t_half_width)),
        label="U",
    )
