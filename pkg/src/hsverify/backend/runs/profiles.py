import numpy as np
import polars as pl

from hsverify.backend.operators.grid import build_grid
from hsverify.backend.profiles.constants import derive_constants
from hsverify.backend.profiles.functions import eval_U_hat, eval_V, eval_Z_hat
from hsverify.backend.spectral.kernel import solve_mode_spectrum
from hsverify.core.params import NumericConfig, ProblemParams


def profile_frame(p: ProblemParams, config: NumericConfig) -> pl.DataFrame:
    """
    Plot-ready samples on the verification grid: U_hat, U_hat', V, Z_hat and
    the ground and zero-band eigenfunctions of A_0 (L2-normalized).

    Eigenfunction signs are fixed so the ground state is positive and the
    zero mode has a positive overlap with Z_hat. `zero_mode` is null when
    A_0 has no eigenvalue in the zero band.
    """
    c = derive_constants(p)
    grid = build_grid(c, config.zero_tol, config)
    spectrum, _ = solve_mode_spectrum(c, grid, config)
    t = grid.nodes
    z_hat = np.asarray(eval_Z_hat(t, c))

    ground = spectrum.eigenfunctions[0]
    if ground[grid.center] < 0.0:
        ground = -ground

    zero = [i for i, e in enumerate(spectrum.eigenvalues) if abs(e) < config.zero_tol]
    zero_mode = None
    if zero:
        zero_mode = spectrum.eigenfunctions[zero[0]]
        if float(np.dot(zero_mode, z_hat)) < 0.0:
            zero_mode = -zero_mode

    return pl.DataFrame({
        "t": t,
        "U_hat": np.asarray(eval_U_hat(t, c)),
        "U_hat_prime": np.asarray(eval_U_hat(t, c, order=1)),
        "V": np.asarray(eval_V(t, c)),
        "Z_hat": z_hat,
        "ground": ground,
        "zero_mode": pl.Series("zero_mode", zero_mode, dtype=pl.Float64) if zero_mode is not None
        else pl.Series("zero_mode", [None] * grid.N, dtype=pl.Float64),
    })
