"""
Closed-form profiles of the Hardy-Sobolev extremal.

Everything here accepts scalars or numpy arrays and returns the same shape.
U_hat is evaluated through its sech form, (2 cosh(beta*eps*t))^(-1/beta), in
log space so that no exponential overflows for large |t|.
"""
from typing import Union

import numpy as np
from scipy.special import expit

from hsverify.core.errors import ParameterError
from hsverify.core.params import DerivedConstants

ArrayLike = Union[float, np.ndarray]


def _sech2(x: np.ndarray) -> np.ndarray:
    e = np.exp(-2.0 * np.abs(x))
    return 4.0 * e / (1.0 + e) ** 2


def log_u_hat(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    # log(2 cosh x) = |x| + log1p(e^(-2|x|)); even in t bit for bit
    ax = np.abs(c.scale * np.asarray(t, dtype=float))
    return -(ax + np.log1p(np.exp(-2.0 * ax))) / c.beta


def eval_U(r: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """U(r) = (r^(beta*alpha_-) + r^(beta*alpha_+))^(-1/beta)."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise ParameterError("[eval_U] radius must be > 0")
    log_r = np.log(r_arr)
    log_sum = np.logaddexp(c.beta * c.alpha_minus * log_r,
                           c.beta * c.alpha_plus * log_r)
    return _like(r, np.exp(-log_sum / c.beta))


def eval_U_prime(r: ArrayLike, c: DerivedConstants) -> ArrayLike:
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0):
        raise ParameterError("[eval_U_prime] radius must be > 0")
    log_r = np.log(r_arr)
    # weight of the r^(beta*alpha_+) term inside the bracket
    w = expit(c.beta * (c.alpha_plus - c.alpha_minus) * log_r)
    u = np.asarray(eval_U(r_arr, c))
    return _like(r, -u / r_arr * (c.alpha_minus * (1.0 - w) + c.alpha_plus * w))


def eval_U_hat(t: ArrayLike, c: DerivedConstants, order: int = 0) -> ArrayLike:
    """
    U_hat(t) and its first two derivatives.

    U_hat'  = -eps * tanh(x) * U_hat
    U_hat'' = eps^2 * U_hat * (1 - (1 + beta) * sech^2(x)),   x = beta*eps*t
    """
    t_arr = np.asarray(t, dtype=float)
    x = c.scale * t_arr
    u = np.exp(log_u_hat(t_arr, c))
    if order == 0:
        out = u
    elif order == 1:
        out = -c.epsilon * np.tanh(x) * u
    elif order == 2:
        out = c.epsilon ** 2 * u * (1.0 - (1.0 + c.beta) * _sech2(x))
    else:
        raise ParameterError(f"[eval_U_hat] order must be 0, 1 or 2, got {order}")
    return _like(t, out)


def eval_Z_hat(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """The scaling generator in cylinder coordinates, Z_hat = -U_hat'."""
    return _like(t, -np.asarray(eval_U_hat(t, c, order=1)))


def eval_V(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """V(t) = e^t * U_hat * (alpha_- + 2 eps expit(-2x)), the sign-stable form of e^t(U_hat' + (n-2)/2 U_hat)."""
    t_arr = np.asarray(t, dtype=float)
    x = c.scale * t_arr
    w0 = c.alpha_minus + 2.0 * c.epsilon * expit(-2.0 * x)
    return _like(t, np.exp(t_arr + log_u_hat(t_arr, c)) * w0)


def eval_V_explicit(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """The two-exponential expression; overflows for large t."""
    t_arr = np.asarray(t, dtype=float)
    e2x = np.exp(2.0 * c.scale * t_arr)
    out = np.exp((1.0 + c.epsilon) * t_arr) * (c.alpha_plus + c.alpha_minus * e2x) \
        * (1.0 + e2x) ** (-c.ell)
    return _like(t, out)


def eval_V_composition(t: ArrayLike, c: DerivedConstants) -> ArrayLike:
    """V(t) = -e^(-(n-2)t/2) U'(e^(-t))."""
    t_arr = np.asarray(t, dtype=float)
    out = -np.exp(-c.half_dim * t_arr) * np.asarray(eval_U_prime(np.exp(-t_arr), c))
    return _like(t, out)


def eval_V_derivatives(t: ArrayLike, c: DerivedConstants, order: int = 0) -> ArrayLike:
    """
    V and its first two derivatives in closed form.

    With V = e^t U_hat w0, w0 = alpha_- + 2 eps e, e = expit(-2x), every
    derivative is e^t U_hat times a bracket free of cancellation at t -> +inf.
    """
    t_arr = np.asarray(t, dtype=float)
    x = c.scale * t_arr
    eps, beta = c.epsilon, c.beta
    e = expit(-2.0 * x)
    w0 = c.alpha_minus + 2.0 * eps * e
    w1 = -4.0 * beta * eps ** 2 * e * (1.0 - e)
    w2 = 8.0 * beta ** 2 * eps ** 3 * e * (1.0 - e) * (1.0 - 2.0 * e)
    d1 = -eps * np.tanh(x)
    d2 = eps ** 2 * (1.0 - (1.0 + beta) * _sech2(x))
    base = np.exp(t_arr + log_u_hat(t_arr, c))
    if order == 0:
        bracket = w0
    elif order == 1:
        bracket = w0 + d1 * w0 + w1
    elif order == 2:
        bracket = w0 + 2.0 * (d1 * w0 + w1) + d2 * w0 + 2.0 * d1 * w1 + w2
    else:
        raise ParameterError(f"[eval_V_derivatives] order must be 0, 1 or 2, got {order}")
    return _like(t, base * bracket)


def _like(template: ArrayLike, values: np.ndarray) -> ArrayLike:
    if np.ndim(template) == 0:
        return float(values)
    return values
