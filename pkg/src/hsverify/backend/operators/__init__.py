# Mode Operators - Single Responsibility: discretize A_mu on a truncated line
from hsverify.backend.operators.grid import LineGrid, build_grid, default_half_width
from hsverify.backend.operators.assembly import (
    TridiagonalOperator, assemble, assemble_potential, potential_q,
    potential_positivity_check, well_profile
)

__all__ = [
    "LineGrid", "build_grid", "default_half_width",
    "TridiagonalOperator", "assemble", "assemble_potential", "potential_q",
    "potential_positivity_check", "well_profile",
]
