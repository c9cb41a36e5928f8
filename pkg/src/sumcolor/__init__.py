"""Proper edge colourings whose vertex sums distinguish all vertices within distance r."""

from .colorer import (
    CaseExhaustion,
    InfeasibleStep,
    RunStats,
    build_ordering,
    color_distinguishing,
    reduce_degree_two,
)
from .graph import (
    BoundParams,
    Graph,
    GraphError,
    IsolatedEdgeError,
    bound_params,
    from_edge_list,
    r_neighborhood,
    validate_colorable,
)
from .oracle import exact_index, exact_sr
from .proper import remap_colors, vizing_color
from .verify import VerificationReport, verify, weighted_degree

__all__ = [
    "BoundParams",
    "CaseExhaustion",
    "Graph",
    "GraphError",
    "InfeasibleStep",
    "IsolatedEdgeError",
    "RunStats",
    "VerificationReport",
    "bound_params",
    "build_ordering",
    "color_distinguishing",
    "exact_index",
    "exact_sr",
    "from_edge_list",
    "r_neighborhood",
    "reduce_degree_two",
    "remap_colors",
    "validate_colorable",
    "verify",
    "vizing_color",
    "weighted_degree",
]
