"""Complexes of projectives, their homotopy category, and mutation."""

from .compare import find_isomorphism, is_indecomposable, is_isomorphic
from .complexes import (
    ChainMap,
    ProjComplex,
    complex_cohomology_dims,
    cone,
    direct_sum,
    identity_map,
    make_complex,
    minimize,
    shift,
    single_projective,
)
from .homs import (
    HomComplex,
    HomSpace,
    cartan_pairing,
    euler_form_cohomology,
    euler_form_dims,
    hom_complex,
    hom_space,
    trusted_window,
)
from .mutation import (
    Approximation,
    left_approximation,
    right_approximation,
    silting_mutate,
    smc_mutate,
)

__all__ = [
    "Approximation",
    "ChainMap",
    "HomComplex",
    "HomSpace",
    "ProjComplex",
    "cartan_pairing",
    "complex_cohomology_dims",
    "cone",
    "direct_sum",
    "euler_form_cohomology",
    "euler_form_dims",
    "find_isomorphism",
    "hom_complex",
    "hom_space",
    "identity_map",
    "is_indecomposable",
    "is_isomorphic",
    "left_approximation",
    "make_complex",
    "minimize",
    "right_approximation",
    "shift",
    "silting_mutate",
    "single_projective",
    "smc_mutate",
    "trusted_window",
]
