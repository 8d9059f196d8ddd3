"""Dimension reduction and intrinsic dimension estimation toolkit."""

from ._dimkit import (
    DimkitError,
    IdeResult,
    NeighborGraph,
    PreprocessRecord,
    ReductionResult,
    apply_to_new,
    center_kernel,
    connected_components,
    eps_graph,
    est_corr_dim,
    est_mle,
    est_pca_dim,
    est_two_nn,
    floyd_warshall,
    generate,
    kernel_matrix,
    knn_graph,
    methods,
    models,
    preprocess,
    reduce,
    run_bench,
)

__all__ = [
    "DimkitError",
    "IdeResult",
    "NeighborGraph",
    "PreprocessRecord",
    "ReductionResult",
    "apply_to_new",
    "center_kernel",
    "connected_components",
    "eps_graph",
    "est_corr_dim",
    "est_mle",
    "est_pca_dim",
    "est_two_nn",
    "floyd_warshall",
    "generate",
    "kernel_matrix",
    "knn_graph",
    "methods",
    "models",
    "preprocess",
    "reduce",
    "run_bench",
]
