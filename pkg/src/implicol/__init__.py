"""Exact graph colouring analysis: implicit edges and identities, explicit-graph
closures, chromatic polynomials, Kempe chains and critical graphs."""
from .coloring import (Coloring, chromatic_number, count_k_colorings, critical_independent_sets,
                       enumerate_k_colorings, find_k_coloring, is_k_colorable)
from .critical import (CriticalityReport, GMinusReport, critical_vertex_adjacency_check, criticality_report,
                       g_minus_analysis, no_implicit_relations_check, structural_violations)
from .errors import DimacsParseError, GraphError, ImplicolError, PreconditionError, RefusalError
from .fixtures import FIGURES, FOUR_PATH, Fixture
from .graph import (BipartiteRelation, Graph, VertexMapping, add_edge, bipartite_relation, complete_graph,
                    contract_edge, cycle_graph, delete_edge, delete_vertex, empty_graph,
                    enumerate_independent_sets, identify_vertices, induced_subgraph, is_independent,
                    path_graph, remove_vertices)
from .harness import SuiteConfig, enumerate_labelled_graphs, run_theorem_suite, suite_report
from .io import emit_dimacs, graph_from_json, graph_to_json, parse_dimacs, to_dot
from .kempe import ChainReport, KempeChain, connecting_chain_report, flip_chain, kempe_chain, kempe_chains
from .polynomial import (ChromaticPolynomial, check_addition_contraction, check_deletion_contraction,
                         chromatic_polynomial, evaluate, falling_factorial, tree_polynomial)
from .relations import (PairClassification, PairStatus, RelationReport, classify_pair,
                        closure_completeness_test, contradiction_test, explicit_graph, explicit_neighborhood,
                        is_implicit_edge, is_implicit_identity, verify_bipartite_characterization)
from .verdict import TheoremVerdict

__version__ = "0.1.0"

__all__ = [
    "BipartiteRelation", "ChainReport", "ChromaticPolynomial", "Coloring", "CriticalityReport",
    "DimacsParseError", "FIGURES", "FOUR_PATH", "Fixture", "GMinusReport", "Graph", "GraphError",
    "ImplicolError", "KempeChain", "PairClassification", "PairStatus", "PreconditionError", "RefusalError",
    "RelationReport", "SuiteConfig", "TheoremVerdict", "VertexMapping",
    "add_edge", "bipartite_relation", "check_addition_contraction", "check_deletion_contraction",
    "chromatic_number", "chromatic_polynomial", "classify_pair", "closure_completeness_test", "complete_graph",
    "connecting_chain_report", "contract_edge", "contradiction_test", "count_k_colorings",
    "critical_independent_sets", "critical_vertex_adjacency_check", "criticality_report", "cycle_graph",
    "delete_edge", "delete_vertex", "emit_dimacs", "empty_graph", "enumerate_independent_sets",
    "enumerate_k_colorings", "enumerate_labelled_graphs", "evaluate", "explicit_graph",
    "explicit_neighborhood", "falling_factorial", "find_k_coloring", "flip_chain", "g_minus_analysis",
    "graph_from_json", "graph_to_json", "identify_vertices", "induced_subgraph", "is_implicit_edge",
    "is_implicit_identity", "is_independent", "is_k_colorable", "kempe_chain", "kempe_chains",
    "no_implicit_relations_check", "parse_dimacs", "path_graph", "remove_vertices", "run_theorem_suite",
    "structural_violations", "suite_report", "to_dot", "tree_polynomial", "verify_bipartite_characterization",
]
