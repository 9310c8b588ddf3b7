"""Exact integer sequences for simplices, cross-polytopes, hypercubes and
rectified simplices, with simplex-basis decompositions, a recursive
face-lattice oracle, and an identity verification suite."""

from .exact import (
    binomial,
    eulerian,
    gbinomial,
    poly_mul,
    poly_pow_truncated,
    poly_trim,
    poly_truncate,
)
from .identities import (
    IDENTITIES,
    IdentityCheck,
    SuiteResult,
    check_alt_vandermonde,
    check_face_interior_sum,
    check_interior_sum,
    check_pascal_alternating_row,
    check_subset_convolution,
    check_vertex_star_sum,
    default_grid,
    load_grid,
    parse_grid,
    run_suite,
)
from .oracle import (
    POINT,
    CrossPolytope,
    FaceCensus,
    FaceEntry,
    Hypercube,
    Hypersimplex,
    Point,
    PolytopeDescriptor,
    Simplex,
    cross_polytope,
    faces_of,
    hypercube,
    hypersimplex,
    interior_number,
    oracle_report,
    polytope_number,
    rectified_simplex_descriptor,
    simplex,
)
from .rectified import (
    eval_shift_identity,
    rectified_decomposition,
    rectified_decomposition_gbinom,
    rectified_simplex_interior,
    rectified_simplex_number,
    rectified_via_decomposition,
    shift_decomposition,
    shift_decomposition_gf,
)
from .regular import (
    cross_polytope_number,
    facet_cut,
    hypercube_number,
    simplex_interior,
    simplex_number,
)

__version__ = "0.1.0"

__all__ = [
    "IDENTITIES",
    "POINT",
    "CrossPolytope",
    "FaceCensus",
    "FaceEntry",
    "Hypercube",
    "Hypersimplex",
    "IdentityCheck",
    "Point",
    "PolytopeDescriptor",
    "Simplex",
    "SuiteResult",
    "binomial",
    "check_alt_vandermonde",
    "check_face_interior_sum",
    "check_interior_sum",
    "check_pascal_alternating_row",
    "check_subset_convolution",
    "check_vertex_star_sum",
    "cross_polytope",
    "cross_polytope_number",
    "default_grid",
    "eulerian",
    "eval_shift_identity",
    "faces_of",
    "facet_cut",
    "gbinomial",
    "hypercube",
    "hypercube_number",
    "hypersimplex",
    "interior_number",
    "load_grid",
    "oracle_report",
    "parse_grid",
    "poly_mul",
    "poly_pow_truncated",
    "poly_trim",
    "poly_truncate",
    "polytope_number",
    "rectified_decomposition",
    "rectified_decomposition_gbinom",
    "rectified_simplex_descriptor",
    "rectified_simplex_interior",
    "rectified_simplex_number",
    "rectified_via_decomposition",
    "run_suite",
    "shift_decomposition",
    "shift_decomposition_gf",
    "simplex",
    "simplex_interior",
    "simplex_number",
]
