# Spectral Solver - Single Responsibility: eigenvalues, eigenfunctions and kernel accounting
from hsverify.backend.spectral.sturm import eigen_count_below, eigenvalues_below, lowest_eigenvalue
from hsverify.backend.spectral.eigvec import (
    RESOLVED_FLOOR, eigenfunction, rayleigh_quotient, normalize, resolved_tail, sign_changes
)
from hsverify.backend.spectral.kernel import (
    kernel_dimension, total_kernel_dimension, solve_mode_spectrum, mode_kernels,
    zero_mode_diagnostics, classify_eigenvalues, decide_verdict, fit_decay, decay_window
)

__all__ = [
    "eigen_count_below", "eigenvalues_below", "lowest_eigenvalue",
    "RESOLVED_FLOOR", "eigenfunction", "rayleigh_quotient", "normalize", "resolved_tail",
    "sign_changes",
    "kernel_dimension", "total_kernel_dimension", "solve_mode_spectrum", "mode_kernels",
    "zero_mode_diagnostics", "classify_eigenvalues", "decide_verdict", "fit_decay",
    "decay_window",
]
