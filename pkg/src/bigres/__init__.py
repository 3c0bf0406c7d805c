"""Exact minimal bigraded free resolutions of hypersurface singularity modules.

The package computes, over the rationals, minimal bigraded free resolutions
of the commutative modules attached to isolated hypersurface singularities,
their Betti numbers, shifts and F-regularity, and cross-checks them against
closed-form results and the classical Koszul / Eagon-Northcott /
Buchsbaum-Rim constructions.
"""

from ._kernel import BACKEND as kernel_backend
from .bettimath import (
    BettiPolynomial,
    M_closed_form,
    dsfs_closed_form,
    en_closed_form,
    multiply_one_plus_T,
    smooth_closed_form,
    space_invariant,
    thm3_closed_form,
)
from .complexes import (
    ChainMap,
    GenKoszulSpec,
    KoszulSpec,
    buchsbaum_rim,
    eagon_northcott,
    generalized_koszul,
    koszul,
    lift_chain_map,
    mapping_cone,
    multiplication_chain_map,
    shift_complex,
)
from .groebner import (
    FreeModuleSpec,
    GroebnerBasis,
    ModuleElement,
    buchberger,
    eliminate,
    normal_form,
    quotient_staircase,
    syzygies,
)
from .resolution import (
    BettiTable,
    FreeComplex,
    MatrixMap,
    betti_table,
    homology_is_zero,
    minimalize,
    presentation_of_quotient,
    regularity_F,
    resolve,
)
from .ring import Bidegree, Polynomial, RingSpec, bidegree, monomial_compare, w_degree
from .singularity import (
    ClassificationVerdict,
    SingularityInput,
    betti_of_Nf,
    bigrN_ideal,
    classify_quasi_homogeneous,
    euler_symbol,
    grDsfs_ideal,
    is_linear_type,
    jacobian_ideal,
    make_input,
    milnor_number,
    rees_kernel,
    tjurina_number,
)

__version__ = "0.1.0"
