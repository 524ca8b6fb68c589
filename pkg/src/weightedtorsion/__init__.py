"""Weighted homology, Hodge-Laplace spectra and analytic/Reidemeister torsion
of vertex-weighted simplicial complexes, computed exactly over the rationals."""

from .chains import (WeightPair, boundary_matrix, chain_scale_iso, gram_matrix, null_basis,
                     reduced_boundary, simplex_weight)
from .complex import (SimplicialComplex, build_complex, euler_characteristic, face,
                      restrict_nonvanishing, star)
from .homology import (inner_product_criterion, restriction_isometry_check,
                       scale_isometry_check, weighted_homology)
from .linalg import RationalMatrix
from .rtorsion import r_torsion, torsion_equivalence_check
from .spectral import (adjoint_boundary, analytic_torsion, check_f_scaling, check_g_scaling,
                       check_main_theorem, check_scale_invariance, hodge_laplacian, pseudo_det,
                       s_exponent, spectrum, symmetrize)
from .wsc import parse_wsc, serialize_wsc

__all__ = [
    "RationalMatrix", "SimplicialComplex", "WeightPair", "adjoint_boundary", "analytic_torsion",
    "boundary_matrix", "build_complex", "chain_scale_iso", "check_f_scaling", "check_g_scaling",
    "check_main_theorem", "check_scale_invariance", "euler_characteristic", "face",
    "gram_matrix", "hodge_laplacian", "inner_product_criterion", "null_basis", "parse_wsc",
    "pseudo_det", "r_torsion", "reduced_boundary", "restrict_nonvanishing",
    "restriction_isometry_check", "s_exponent", "scale_isometry_check", "serialize_wsc",
    "simplex_weight", "spectrum", "star", "symmetrize", "torsion_equivalence_check",
    "weighted_homology",
]
