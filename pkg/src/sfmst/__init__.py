"""Minimum weight spanning trees of weighted scale-free networks.

Core pieces: an immutable weighted-graph type, a union-find structure,
Kruskal's algorithm (with Prim's and an exhaustive enumerator as
cross-checks), a preferential-attachment generator with two
degree-correlated weight models, distribution statistics, and a
reproducible ensemble experiment runner. Hot loops are JIT-compiled via
numba when available; set ``SFMST_BACKEND=numpy`` to force the fallback.
"""

__version__ = "0.1.0"

from .graph import (
    Cut,
    Edge,
    GraphError,
    WeightedGraph,
    build_graph,
    candidate_edges,
    crosses_cut,
    degree,
    is_connected,
    read_graph,
    write_graph,
)
from .unionfind import UnionFind, UnionFindError
from .mst import (
    DisconnectedGraphError,
    SpanningTree,
    brute_force_mst,
    is_feasible_extension,
    kruskal,
    kruskal_with_trace,
    prim,
    read_tree,
    verify_spanning_tree,
    write_tree,
)
from .generate import (
    DisorderType,
    GeneratorParams,
    assign_disorder,
    expected_edge_count,
    generate_preferential_attachment,
)
from .stats import (
    FitResult,
    Histogram,
    LinearBinning,
    LogBinning,
    degree_histogram,
    fit_decay_rate,
    fit_tail_exponent,
    merge_histograms,
    mst_efficiency,
    weight_histogram,
)
from .experiments import (
    EnsembleResult,
    ExperimentConfig,
    efficiency_scaling,
    run_ensemble,
    run_single,
)

__all__ = [
    "__version__",
    "Cut",
    "Edge",
    "GraphError",
    "WeightedGraph",
    "build_graph",
    "candidate_edges",
    "crosses_cut",
    "degree",
    "is_connected",
    "read_graph",
    "write_graph",
    "UnionFind",
    "UnionFindError",
    "DisconnectedGraphError",
    "SpanningTree",
    "brute_force_mst",
    "is_feasible_extension",
    "kruskal",
    "kruskal_with_trace",
    "prim",
    "read_tree",
    "verify_spanning_tree",
    "write_tree",
    "DisorderType",
    "GeneratorParams",
    "assign_disorder",
    "expected_edge_count",
    "generate_preferential_attachment",
    "FitResult",
    "Histogram",
    "LinearBinning",
    "LogBinning",
    "degree_histogram",
    "fit_decay_rate",
    "fit_tail_exponent",
    "merge_histograms",
    "mst_efficiency",
    "weight_histogram",
    "EnsembleResult",
    "ExperimentConfig",
    "efficiency_scaling",
    "run_ensemble",
    "run_single",
]
