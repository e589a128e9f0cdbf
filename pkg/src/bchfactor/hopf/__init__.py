"""Rooted-tree Hopf algebra, tree characters and their factorizations."""
from .functionals import (
    MAX_DEGREE, Functional, character, character_from_json, compose_antipode, counit,
    default_laurent_ring, grading_involution, infinitesimal_character, parity_part,
    pi_minus, pi_plus, pole_lift, product_closure_parity,
)
from .renormalization import (
    BIRKHOFF_METHODS, birkhoff_decompose, bogoliubov_counterterm, even_odd_chi,
    even_odd_decompose, is_even, is_odd_character, is_pole_free, phi_plus_direct,
    preparation_map, rbar_map,
)
from .trees import (
    EMPTY, VERTEX, forest_antipode, forest_coproduct, forest_degree, forests_of_degree,
    forests_up_to, format_forest, format_tree, make_forest, make_tree, merge, parse_forest,
    parse_tree, tree_antipode, tree_coproduct, tree_degree, trees_of_degree, trees_up_to,
)

coproduct = forest_coproduct
convolution = Functional.__mul__

__all__ = [
    "MAX_DEGREE", "Functional", "character", "character_from_json", "compose_antipode",
    "counit", "default_laurent_ring", "grading_involution", "infinitesimal_character",
    "parity_part", "pi_minus", "pi_plus", "pole_lift", "product_closure_parity",
    "BIRKHOFF_METHODS", "birkhoff_decompose", "bogoliubov_counterterm", "even_odd_chi",
    "even_odd_decompose", "is_even", "is_odd_character", "is_pole_free", "phi_plus_direct",
    "preparation_map", "rbar_map", "EMPTY", "VERTEX", "forest_antipode", "forest_coproduct",
    "forest_degree", "forests_of_degree", "forests_up_to", "format_forest", "format_tree",
    "make_forest", "make_tree", "merge", "parse_forest", "parse_tree", "tree_antipode",
    "tree_coproduct", "tree_degree", "trees_of_degree", "trees_up_to", "coproduct",
    "convolution",
]
