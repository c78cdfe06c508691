"""Exact shortest-path counting in bounded-degree multigraphs.

Counts and enumerates geodesics, checks the closed-form bounds on their
number in exact integer arithmetic, evaluates the entropy decomposition of
a uniform geodesic, builds the extremal families, searches layered
multigraphs for the maximum count, and computes minimal F2 fillings.
"""

from .bounds import KINDS, CertReport, ExactBound, certify, evaluate_bound, refined_certificate
from .entropy import check_degree_split, entropy_decomposition, vertex_marginals
from .errors import GeodesyError
from .extremal import closed_form_count, gen_blowup_cycle, gen_cycle_multigraph
from .filling import (
    ChainComplexF2,
    ChainF2,
    boundary,
    build_complex,
    is_irreducible,
    minimal_fillings,
)
from .geodesic import (
    GeodesicDAG,
    count_shortest_paths,
    enumerate_shortest_paths,
    geodesic_dag,
    path_probability,
    sample_shortest_path,
)
from .graph import MultiGraph, WeightedGraph, girth, max_degree, parse_graph, read_graph, serialize_graph
from .search import search_max_count
from .walk import arrival_bound, minimal_arrival_probability, multigraph_walk, quantize_weights

__version__ = "0.1.0"
