"""Planar, 4-connected, K_{2,5}-minor-free graphs: constructions, predicates and verifiers."""

from .connectivity import (
    CutWitness,
    edge_connectivity,
    is_cyclically_4_edge_connected,
    is_k_connected,
    min_vertex_cut_bruteforce,
    minimum_vertex_cut,
    vertex_connectivity,
)
from .errors import (
    CapabilityError,
    ClaimViolation,
    Graph6Error,
    GraphError,
    HypothesisError,
    IngestError,
    NotApplicableError,
    PreconditionError,
)
from .families import (
    FaceList,
    complete,
    complete_bipartite,
    cycle,
    cycle_square,
    generate,
    hamiltonian_square_cycle,
    is_squared_cycle,
    line_graph,
    regularity,
    square,
    squared_cycle_embedding,
)
from .graph import (
    Graph,
    components,
    contract_edge,
    delete_vertices,
    induced_subgraph,
    is_connected,
    is_isomorphic,
    neighborhood,
)
from .graph6 import emit_graph6, parse_graph6
from .minors import MinorModel, find_complete_bipartite_minor, find_minor, is_planar, verify_minor_model
from .theorem import (
    PropertyReport,
    classify,
    every_edge_in_triangle,
    lemma1_check,
    lemma2_check,
    lemma3_check,
    lemma4_witness,
    odd_square_k5,
)
from .verification import VerificationReport, enumerate_graphs, verify_main_theorem

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ClaimViolation",
    "classify",
    "complete",
    "complete_bipartite",
    "components",
    "contract_edge",
    "CutWitness",
    "cycle",
    "cycle_square",
    "delete_vertices",
    "edge_connectivity",
    "emit_graph6",
    "enumerate_graphs",
    "every_edge_in_triangle",
    "FaceList",
    "find_complete_bipartite_minor",
    "find_minor",
    "generate",
    "Graph",
    "Graph6Error",
    "GraphError",
    "hamiltonian_square_cycle",
    "HypothesisError",
    "induced_subgraph",
    "IngestError",
    "is_connected",
    "is_cyclically_4_edge_connected",
    "is_isomorphic",
    "is_k_connected",
    "is_planar",
    "is_squared_cycle",
    "lemma1_check",
    "lemma2_check",
    "lemma3_check",
    "lemma4_witness",
    "line_graph",
    "min_vertex_cut_bruteforce",
    "minimum_vertex_cut",
    "MinorModel",
    "neighborhood",
    "NotApplicableError",
    "odd_square_k5",
    "parse_graph6",
    "PreconditionError",
    "PropertyReport",
    "regularity",
    "square",
    "squared_cycle_embedding",
    "VerificationReport",
    "verify_main_theorem",
    "verify_minor_model",
    "vertex_connectivity",
]
