"""Exact position-number computations and extremal searches on small graphs."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    INFINITE,
    blow_up,
    clique_number,
    complete_graph,
    complete_multipartite_graph,
    cycle_graph,
    diameter,
    distance_matrix,
    extreme_vertices,
    independent_clique_number,
    join,
    leaf_count,
    path_graph,
    add_pendant,
)
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .canon import canonical_code, canonical_form
from .position import (
    DisconnectedGraphError,
    PositionKind,
    Violation,
    Witness,
    brute_force_position_number,
    exists_induced_path_through,
    gp,
    in_position,
    mp,
    optimal_position_sets,
    position_number,
    position_violation,
)
from .enumeration import enumerate_connected, enumerate_graphs, ingest_graph6
from .families import FAMILIES, FamilyClaims, build_family, family_claims
