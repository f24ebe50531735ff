"""Classical and open-quantum-walk PageRank on directed and undirected graphs."""

from .classical import google_matrix, hyperlink_matrix, pagerank
from .diagnostics import (AlphaSweepRecord, RankingComparison, alpha_sweep,
                          average_state, compare, default_alpha_grid,
                          kendall_tau, rank_vertices, top_k)
from .errors import NotConvergedError, StateCorruptionError
from .estimators import ClassicalPageRank, QuantumPageRank, as_digraph
from .graph import (FAMILIES, DiGraph, EdgeListParseError, from_edge_list,
                    generate, layers_from_root, symmetrize)
from .linalg import (conj_transpose, fidelity_blocks, hermitian_eig, matmul,
                     psd_sqrt, trace, trace_distance_blocks, trace_norm)
from .oqw import (WalkParams, WalkResult, WalkState, coin_set,
                  full_space_step, induced_markov_matrix, initial_state,
                  probabilities, run, step, weyl)

__version__ = "0.1.0"

__all__ = [
    "AlphaSweepRecord", "ClassicalPageRank", "DiGraph", "EdgeListParseError",
    "FAMILIES", "NotConvergedError", "QuantumPageRank", "RankingComparison",
    "StateCorruptionError", "WalkParams", "WalkResult", "WalkState",
    "alpha_sweep", "as_digraph", "average_state", "coin_set", "compare",
    "conj_transpose", "default_alpha_grid", "fidelity_blocks",
    "from_edge_list", "full_space_step", "generate", "google_matrix",
    "hermitian_eig", "hyperlink_matrix", "induced_markov_matrix",
    "initial_state", "kendall_tau", "layers_from_root", "matmul", "pagerank",
    "probabilities", "psd_sqrt", "rank_vertices", "run", "step", "symmetrize",
    "top_k", "trace", "trace_distance_blocks", "trace_norm", "weyl",
    "__version__",
]
