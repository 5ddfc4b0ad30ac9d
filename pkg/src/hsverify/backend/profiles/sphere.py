from typing import List

from math import comb

from hsverify.core.errors import ParameterError
from hsverify.core.params import SphereMode


def harmonic_dimension(n: int, k: int) -> int:
    """Dimension of degree-k spherical harmonics on S^{n-1}: dim P_k - dim P_{k-2}."""
    total = comb(k + n - 1, n - 1)
    lower = comb(k + n - 3, n - 1) if k >= 2 else 0
    return total - lower


def sphere_modes(n: int, k_max: int = 8) -> List[SphereMode]:
    """Levels mu_k = k(k+n-2) of -Δ_can on S^{n-1}, k = 0..k_max."""
    if n < 3:
        raise ParameterError(f"[sphere_modes] n={n} must be >= 3")
    if k_max < 1:
        raise ParameterError(f"[sphere_modes] k_max={k_max} must be >= 1")
    return [
        SphereMode(k=k, mu=float(k * (k + n - 2)),
                   multiplicity=harmonic_dimension(n, k))
        for k in range(k_max + 1)
    ]
