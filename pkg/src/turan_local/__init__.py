"""Vertex-localized Turán bounds with exact arithmetic and small-graph certification."""

from __future__ import annotations

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    bound_report,
    classical_floor_bound,
    classical_nofloor_bound,
    edge_localized_check,
    recover_classical_chain,
    vertex_localized_bound,
)
from .canon import canonical_form
from .clique import (
    edge_clique_weights,
    max_clique,
    oracle_edge_weights,
    oracle_max_clique,
    oracle_vertex_weights,
    vertex_clique_weights,
)
from .enumeration import enumerate_graphs
from .errors import (
    ContractError,
    DomainError,
    Graph6Error,
    MalformedGraphError,
    SizeLimitError,
    TuranLocalError,
)
from .extremal import (
    ExtremalClassification,
    Tag,
    TuranParams,
    classify_extremal,
    extremal_weight_profile_check,
    in_S,
    is_paraglider,
    is_y_graph,
    recognize_turan,
    turan_edge_count,
    turan_graph,
)
from .graph import PARAGLIDER, Y_GRAPH, Graph, complement, edge_count, graph_from_edges, induced_subgraph
from .graph6 import parse_graph6, write_graph6
from .verify import VerificationReport, verify_theorems
