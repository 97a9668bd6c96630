"""Exact and approximate top-k overlapping densest subgraphs."""

from .densest import (
    DensestResult,
    FlowNetwork,
    build_network,
    constrained_densest_subgraph,
    densest_subgraph,
    greedy_peel,
    min_cut_source_side,
)
from .distinct import (
    DistinctnessWitness,
    densest_distinct_constant_k,
    densest_distinct_no_crossing,
    enumerate_witnesses,
    has_crossing_pair,
)
from .errors import (
    BudgetExceeded,
    CertificationRefused,
    ContractError,
    InfeasibleError,
    OverlapDenseError,
    ParseError,
    ValidationError,
)
from .generators import generate_graph
from .graph import (
    Graph,
    are_crossing,
    density,
    distance,
    induced_edge_count,
    make_collection,
    objective,
    parse_edge_list,
    vertex_set,
)
from .hardness import (
    CliquePartition,
    HardnessInstance,
    build_hardness_instance,
    extract_partition_from_solution,
    verify_partition_to_solution,
)
from .oracle import OracleBudget, oracle_densest, oracle_densest_distinct, oracle_topk
from .solvers import SolveReport, singleton_solution, solve, solve_constant_k, solve_general

__version__ = "0.1.0"
