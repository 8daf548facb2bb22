"""Solver for (r,l)-Vertex Deletion and its independent variant.

Supported parameter cells: every r, l with max(r, l) <= 2. Recognition for
max(r, l) >= 3 is NP-complete, so those cells raise
UnsupportedParametersError.
"""

__version__ = "0.1.0"

from .compression import (
    CompressionProblem,
    CompressionResult,
    CompressionStats,
    iterative_compress,
)
from .deletion import (
    LiftedInstance,
    ProblemSpec,
    Solution,
    SolverConfig,
    SolveStats,
    lift_add_clique,
    lift_add_clique_small,
    lift_add_joined_independent,
    lift_complement,
    solve_22,
    solve_vd,
)
from .errors import (
    ContractError,
    ParseError,
    SizeGuardError,
    TreewidthLimitError,
    UnsupportedParametersError,
)
from .generators import (
    PlantedInstance,
    nonisomorphic_graphs,
    planted_instance,
    random_bipartite,
    random_graph,
)
from .graphs import (
    Bipartition,
    Graph,
    classify_set,
    complement,
    connected_components,
    induced_subgraph,
    parse_graph,
    to_dimacs,
    to_edgelist,
    two_coloring,
)
from .independent import (
    AuxiliaryGraph,
    HardnessGadget,
    OCTWitness,
    ValidPartition,
    hardness_gadget,
    independent_22,
    independent_oct,
    oct_auxiliary_graph,
    restricted_independent_oct,
    solve_ivd,
    solve_ivd_12,
)
from .kernels import backend_name
from .mincut import (
    DEFAULT_WIDTH_CAP,
    TreeDecomposition,
    independent_mincut,
    tree_decompose,
)
from .oracle import (
    brute_coarse_splits,
    brute_count_partitions,
    brute_independent_oct,
    brute_is_rl,
    brute_oct,
    brute_vd,
)
from .partitions import (
    Perturbation,
    RLPartition,
    apply_perturbation,
    enumerate_partitions,
    recognize,
    verify_partition,
)
from .transversals import (
    CopyGadget,
    RestrictedInstance,
    copy_gadget,
    solve_ivc,
    solve_oct,
    solve_restricted_oct,
)

__all__ = [
    "AuxiliaryGraph",
    "Bipartition",
    "CompressionProblem",
    "CompressionResult",
    "CompressionStats",
    "ContractError",
    "CopyGadget",
    "DEFAULT_WIDTH_CAP",
    "Graph",
    "HardnessGadget",
    "LiftedInstance",
    "OCTWitness",
    "ParseError",
    "Perturbation",
    "PlantedInstance",
    "ProblemSpec",
    "RLPartition",
    "RestrictedInstance",
    "SizeGuardError",
    "Solution",
    "SolveStats",
    "SolverConfig",
    "TreeDecomposition",
    "TreewidthLimitError",
    "UnsupportedParametersError",
    "ValidPartition",
    "apply_perturbation",
    "backend_name",
    "brute_coarse_splits",
    "brute_count_partitions",
    "brute_independent_oct",
    "brute_is_rl",
    "brute_oct",
    "brute_vd",
    "classify_set",
    "complement",
    "connected_components",
    "copy_gadget",
    "enumerate_partitions",
    "hardness_gadget",
    "independent_22",
    "independent_mincut",
    "independent_oct",
    "induced_subgraph",
    "iterative_compress",
    "lift_add_clique",
    "lift_add_clique_small",
    "lift_add_joined_independent",
    "lift_complement",
    "nonisomorphic_graphs",
    "oct_auxiliary_graph",
    "parse_graph",
    "planted_instance",
    "random_bipartite",
    "random_graph",
    "recognize",
    "restricted_independent_oct",
    "solve_22",
    "solve_ivc",
    "solve_ivd",
    "solve_ivd_12",
    "solve_oct",
    "solve_restricted_oct",
    "solve_vd",
    "to_dimacs",
    "to_edgelist",
    "tree_decompose",
    "two_coloring",
    "verify_partition",
    "__version__",
]
