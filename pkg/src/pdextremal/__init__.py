"""Extremal constants for positive definite functions on finite abelian groups.

Exact linear-programming values of the two-set, Turan and Delsarte constants,
packing/covering/tiling predicates with density bounds, the Bessel-based
radial constructions, and the extremal cosine trinomial with its lower-bound
construction on the real line.
"""

__version__ = "0.1.0"

from .groups import (
    Group,
    GroupFunction,
    SymSet,
    dft,
    difference_set,
    inverse_dft,
    make_group,
    real_spectrum,
)
from .posdef import autocorrelation, is_posdef, periodize, schur_product
from .lp import LpProblem, LpSolution, SolverFailure, solve
from .extremal import (
    ExtremalResult,
    delsarte,
    turan,
    two_set_constant,
    verify_automorphism_invariance,
    verify_homomorphism_bound,
    verify_main_theorem,
    verify_product_bound,
    verify_tile_theorem,
)
from .density import (
    PeriodicSet,
    auud_finite,
    auud_periodic,
    covers,
    density_bounds_check,
    integer_shadow,
    max_density_search,
    packing_type,
    packs_strict,
    tiles_strict,
)
from .radial import (
    QuadratureError,
    RadialSpec,
    ball_char_transform,
    bessel_first_zero,
    bessel_j,
    gorbachev_H,
    hankel_transform,
    sphere_transform,
    yudin_Y,
    yudin_sign_check,
)
from .trinomial import (
    Trinomial,
    critical_coeffs,
    example51_comparison,
    example51_lower_bound,
    is_nonneg,
    optimize_trinomial,
)

__all__ = [
    "__version__",
    "Group", "GroupFunction", "SymSet", "make_group", "dft", "inverse_dft",
    "real_spectrum", "difference_set",
    "is_posdef", "autocorrelation", "schur_product", "periodize",
    "LpProblem", "LpSolution", "SolverFailure", "solve",
    "ExtremalResult", "two_set_constant", "turan", "delsarte",
    "verify_tile_theorem", "verify_main_theorem", "verify_homomorphism_bound",
    "verify_product_bound", "verify_automorphism_invariance",
    "PeriodicSet", "packs_strict", "covers", "tiles_strict", "packing_type",
    "auud_finite", "auud_periodic", "max_density_search", "density_bounds_check",
    "integer_shadow",
    "RadialSpec", "QuadratureError", "bessel_j", "bessel_first_zero", "yudin_Y",
    "yudin_sign_check", "hankel_transform", "ball_char_transform",
    "sphere_transform", "gorbachev_H",
    "Trinomial", "critical_coeffs", "is_nonneg", "optimize_trinomial",
    "example51_lower_bound", "example51_comparison",
]
