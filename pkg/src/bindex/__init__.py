"""Binding numbers of graphs: exact computation, extremal constructions,
and certified spectral comparisons."""

from .binding import (
    BindingResult,
    binding_below_threshold,
    binding_number_bruteforce,
    binding_number_flow,
    binding_sets_all,
    toughness_bruteforce,
)
from .codec import (
    Graph6Error,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    load_graph,
)
from .constructions import (
    Construction,
    RegimeReport,
    alpha_value,
    beta_value,
    bipartite_extremal_D,
    bipartite_extremal_K,
    f_formula,
    family_general,
    g_formula,
    general_extremal,
    lemma6_extremal,
    lemma6_max,
    theorem6_regime,
    theorem7_regime,
)
from .graph import (
    BipartitionSpec,
    DomainError,
    Graph,
    LimitError,
    complete,
    complete_bipartite,
    components,
    disjoint_union,
    double_nested,
    is_independent,
    join,
    neighborhood_of_set,
    vertices_of,
)
from .polynomials import IntPolynomial, RootInterval, compare_largest_roots, largest_real_root
from .spectral import (
    ConvergenceError,
    EquitabilityError,
    QuotientMatrix,
    certified_radius,
    charpoly,
    check_rho_le_sqrt_e,
    compare_radii,
    family_polynomial,
    quotient_matrix,
    spectral_radius_power,
)
from .verify import (
    VerificationReport,
    check_polynomial_identities,
    enumerate_bipartite_max,
    enumerate_bipartite_theorem6,
    enumerate_general_properties,
    scan_bipartite_family,
    scan_family_general,
    scan_lemma12,
)

__version__ = "0.1.0"

__all__ = [
    "BindingResult",
    "BipartitionSpec",
    "Construction",
    "ConvergenceError",
    "DomainError",
    "EquitabilityError",
    "Graph",
    "Graph6Error",
    "IntPolynomial",
    "LimitError",
    "QuotientMatrix",
    "RegimeReport",
    "RootInterval",
    "VerificationReport",
    "alpha_value",
    "beta_value",
    "binding_below_threshold",
    "binding_number_bruteforce",
    "binding_number_flow",
    "binding_sets_all",
    "bipartite_extremal_D",
    "bipartite_extremal_K",
    "certified_radius",
    "charpoly",
    "check_polynomial_identities",
    "check_rho_le_sqrt_e",
    "compare_largest_roots",
    "compare_radii",
    "complete",
    "complete_bipartite",
    "components",
    "disjoint_union",
    "double_nested",
    "edge_list_decode",
    "edge_list_encode",
    "enumerate_bipartite_max",
    "enumerate_bipartite_theorem6",
    "enumerate_general_properties",
    "f_formula",
    "family_general",
    "family_polynomial",
    "g_formula",
    "general_extremal",
    "graph6_decode",
    "graph6_encode",
    "is_independent",
    "join",
    "largest_real_root",
    "lemma6_extremal",
    "lemma6_max",
    "load_graph",
    "neighborhood_of_set",
    "quotient_matrix",
    "scan_bipartite_family",
    "scan_family_general",
    "scan_lemma12",
    "spectral_radius_power",
    "theorem6_regime",
    "theorem7_regime",
    "toughness_bruteforce",
    "vertices_of",
]
