"""Exact generalized 3-connectivity for small simple graphs."""

from ._kernel import BACKEND
from .canonical import canonical_form, canonical_labeling, is_isomorphic
from .constructions import build_extremal, build_h, figure_fixture, smooth, smooth_many
from .graph import (
    Graph,
    GraphError,
    degree,
    degree_two_set,
    is_connected,
    is_stable_set,
    min_degree,
)
from .packing import (
    DisjointTreeFamily,
    KappaResult,
    SolverLimitError,
    TreeCertificate,
    find_disjoint_trees,
    kappa3,
    kappa_of_set,
    kappa_upper_bounds,
    validate_certificate,
)

__all__ = [
    "BACKEND",
    "DisjointTreeFamily",
    "Graph",
    "GraphError",
    "KappaResult",
    "SolverLimitError",
    "TreeCertificate",
    "build_extremal",
    "build_h",
    "canonical_form",
    "canonical_labeling",
    "degree",
    "degree_two_set",
    "figure_fixture",
    "find_disjoint_trees",
    "is_connected",
    "is_isomorphic",
    "is_stable_set",
    "kappa3",
    "kappa_of_set",
    "kappa_upper_bounds",
    "min_degree",
    "smooth",
    "smooth_many",
    "validate_certificate",
]
