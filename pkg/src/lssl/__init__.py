"""Graph-based semi-supervised learning with Laplacian kernels.

Core method: solve (I + beta*L) F = Y and classify each node by the argmax
over the columns of F. The package also provides the heat-kernel and
generalized (PageRank-style) comparison methods, proximity and distance
measures derived from the kernel, combinatorial and Monte-Carlo verification
oracles, a paired-comparison ridge model, and an experiment harness.
"""

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    laplacian,
    lazy_transition,
    load_edge_list,
    normalized_laplacian,
    serialize_edge_list,
    standard_transition,
)
from .kernels import (
    KernelSpec,
    generalized_ssl_apply,
    heat_kernel_apply,
    kernel_matrix,
    regularized_laplacian_apply,
)
from .labeling import (
    LabelError,
    build_label_matrix,
    classify,
    load_labels,
    precision,
    sample_seeds,
)
from .proximity import (
    ForestCensus,
    adjusted_forest_distance,
    enumerate_rooted_forests,
    group_inverse,
    hub_augmented_graph,
    log_forest_distance,
    monte_carlo_geometric_walk,
    resistance_distance,
)
from .ridge import ComparisonSet, bayes_beta, incidence_matrix, ridge_estimate
from .solvers import (
    SolveReport,
    SolverSpec,
    cg_solve,
    cholesky_solve,
    expm_action,
    power_iteration_solve,
)
from .experiments import SweepConfig, SweepResult, bundled_lesmis, run_sweep, write_csv

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
