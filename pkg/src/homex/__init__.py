"""Vertex-minimal pure simplicial complexes with nontrivial homology."""

from homex.complex_core import (
    SimplicialComplex,
    cone,
    f_vector,
    faces_of_dim,
    from_facets,
    full_simplex,
    induced_subcomplex,
    is_pure,
    simplex_boundary,
    skeleton,
    suspension,
    union_complexes,
)
from homex.connectivity import (
    ExpansionOp,
    apply_expansion,
    collapse_to_dimension,
    facet_graph,
    growth_process,
    is_strongly_connected,
    strong_components,
)
from homex.constructions import (
    bound_pure,
    bound_rel,
    bound_strong,
    build_mh,
    build_ms,
    build_rel,
    build_suspension_example,
    connectivity_threshold,
)
from homex.homology import (
    boundary_matrix,
    homology_profile,
    is_homology_nontrivial,
    mv_corollary_check,
    smith_normal_form,
)
from homex.nerve import nerve_lemma_witness, nerve_max
from homex.search import SearchConstraint, enumerate_pure_canonical, find_minimal_witness, verify_bound

__version__ = "0.1.0"

__all__ = [
    "ExpansionOp",
    "SearchConstraint",
    "SimplicialComplex",
    "apply_expansion",
    "bound_pure",
    "bound_rel",
    "bound_strong",
    "boundary_matrix",
    "build_mh",
    "build_ms",
    "build_rel",
    "build_suspension_example",
    "collapse_to_dimension",
    "cone",
    "connectivity_threshold",
    "enumerate_pure_canonical",
    "f_vector",
    "faces_of_dim",
    "facet_graph",
    "find_minimal_witness",
    "from_facets",
    "full_simplex",
    "growth_process",
    "homology_profile",
    "induced_subcomplex",
    "is_homology_nontrivial",
    "is_pure",
    "is_strongly_connected",
    "mv_corollary_check",
    "nerve_lemma_witness",
    "nerve_max",
    "simplex_boundary",
    "skeleton",
    "smith_normal_form",
    "strong_components",
    "suspension",
    "union_complexes",
    "verify_bound",
]
