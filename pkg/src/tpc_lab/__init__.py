"""Total-proper connection numbers of small graphs, exactly.

The package computes tpc(G), the least number of colors in a total
coloring of G under which every vertex pair is joined by a path whose
adjacent elements (edges along the path, internal vertices, and each
internal vertex against its two path edges) receive distinct colors.
It also carries constructive colorings for the graph families where
closed-form values are known, and an exhaustive verification harness
for a registry of statements about tpc on small orders.
"""

from .coloring import (
    ConnectivityCheck,
    PathEndpointView,
    TotalColoring,
    check_total_proper_connected,
    endpoint_view,
    find_total_proper_path,
    has_strong_property,
    is_total_proper_path,
    iter_total_proper_paths,
    validate_coloring,
)
from .families import (
    FamilySpec,
    build_family,
    color_bipartite_plus_vertex,
    color_h_family,
    color_traceable,
    color_tree,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_star,
    family_names,
    path_graph,
    star_graph,
    theorem6_graph,
)
from .graphs import (
    Graph,
    bridges,
    canonical_code,
    canonical_form,
    complement,
    cut_vertices,
    enumerate_connected_graphs,
    enumerate_trees,
    find_hamiltonian_path,
    is_complete,
    is_connected,
    is_tree,
    is_two_connected,
    low_degree_spanning_tree,
    max_bridge_degree,
    max_degree,
    parse_graph6,
    read_graph6_file,
    to_graph6,
)
from .harness import (
    STATEMENT_DESCRIPTIONS,
    STATEMENT_IDS,
    TheoremCase,
    VerificationReport,
    emit_report,
    ng_scan,
    verify_statement,
)
from .solver import (
    Bounds,
    DEFAULT_BUDGET,
    SolveBudget,
    TpcCertificate,
    certificate_to_json_dict,
    compute_bounds,
    decide_k,
    find_strong_coloring,
    naive_oracle_tpc,
    tpc_exact,
)

__version__ = "0.1.0"

__all__ = [
    "Bounds",
    "ConnectivityCheck",
    "DEFAULT_BUDGET",
    "FamilySpec",
    "Graph",
    "PathEndpointView",
    "STATEMENT_DESCRIPTIONS",
    "STATEMENT_IDS",
    "SolveBudget",
    "TheoremCase",
    "TotalColoring",
    "TpcCertificate",
    "VerificationReport",
    "bridges",
    "build_family",
    "canonical_code",
    "canonical_form",
    "certificate_to_json_dict",
    "check_total_proper_connected",
    "color_bipartite_plus_vertex",
    "color_h_family",
    "color_traceable",
    "color_tree",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "compute_bounds",
    "cut_vertices",
    "cycle_graph",
    "decide_k",
    "double_star",
    "emit_report",
    "endpoint_view",
    "enumerate_connected_graphs",
    "enumerate_trees",
    "family_names",
    "find_hamiltonian_path",
    "find_strong_coloring",
    "find_total_proper_path",
    "has_strong_property",
    "is_complete",
    "is_connected",
    "is_total_proper_path",
    "is_tree",
    "is_two_connected",
    "iter_total_proper_paths",
    "low_degree_spanning_tree",
    "max_bridge_degree",
    "max_degree",
    "naive_oracle_tpc",
    "ng_scan",
    "parse_graph6",
    "path_graph",
    "read_graph6_file",
    "star_graph",
    "theorem6_graph",
    "to_graph6",
    "tpc_exact",
    "validate_coloring",
    "verify_statement",
]
