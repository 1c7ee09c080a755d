"""Exact-arithmetic analysis of monomial Cremona maps.

Submodules: :mod:`monomials` (sets, log-matrices, canonical restrictions),
:mod:`inversion` (birationality and the Cremona inverse), :mod:`degree2`
(graph classification of quadratic sets), :mod:`hilbert` (bounded
Hilbert-base and normality checks, Cremona extraction) and :mod:`cli`.
"""

from .degree2 import (
    CremonaGraph,
    Degree2Classification,
    InverseEntryReport,
    NormalForm,
    build_graph,
    classify,
    diameter,
    edge_graph,
    inverse_degree,
    inverse_entry_profile,
    inversion_factor_degree2,
    is_cremona_degree2,
    is_inverse_linear_type,
    normal_form,
    random_cremona_degree2,
)
from .errors import ConsistencyError, NotCremonaError, ParseError
from .hilbert import (
    CremonaSubsetReport,
    HilbertReport,
    LiftedCone,
    NormalityReport,
    cone_contains,
    cremona_from_normal,
    find_cremona_subsets,
    is_hilbert_base,
    is_normal_ideal,
    lift,
    semigroup_contains,
    smith_lattice_index,
)
from .inversion import (
    BirationalityReport,
    InversionData,
    inverse_set,
    inversion_factor,
    invert,
    is_cremona,
    minor_gcd,
    verify_inversion,
)
from .monomials import (
    CanonicalReport,
    LogMatrix,
    MonomialSet,
    all_degree_monomials,
    check_canonical,
    equal_up_to_permutation,
    find_permutation_match,
    is_cohesive,
    log_matrix,
    parse_monomials,
    render_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "BirationalityReport",
    "CanonicalReport",
    "ConsistencyError",
    "CremonaGraph",
    "CremonaSubsetReport",
    "Degree2Classification",
    "HilbertReport",
    "InverseEntryReport",
    "InversionData",
    "LiftedCone",
    "LogMatrix",
    "MonomialSet",
    "NormalForm",
    "NormalityReport",
    "NotCremonaError",
    "ParseError",
    "all_degree_monomials",
    "build_graph",
    "check_canonical",
    "classify",
    "cone_contains",
    "cremona_from_normal",
    "diameter",
    "edge_graph",
    "equal_up_to_permutation",
    "find_cremona_subsets",
    "find_permutation_match",
    "inverse_degree",
    "inverse_entry_profile",
    "inverse_set",
    "inversion_factor",
    "inversion_factor_degree2",
    "invert",
    "is_cohesive",
    "is_cremona",
    "is_cremona_degree2",
    "is_hilbert_base",
    "is_inverse_linear_type",
    "is_normal_ideal",
    "lift",
    "log_matrix",
    "minor_gcd",
    "normal_form",
    "parse_monomials",
    "random_cremona_degree2",
    "render_monomial",
    "semigroup_contains",
    "smith_lattice_index",
    "verify_inversion",
]
