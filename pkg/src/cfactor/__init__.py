"""Connected f-factors of graphs.

Given a graph ``G`` and degree targets ``f``, find a spanning subgraph in which
every vertex ``v`` has degree ``f(v)`` and which is connected, optionally of
minimum total edge weight.  Also ships brute-force oracles and a generator
that turns Hamiltonian cycle instances into connected f-factor instances.
"""

from cfactor.alternating import (
    BLUE,
    RED,
    ColoredSubgraph,
    alternating_euler_tour,
    circuit_weight,
    color_difference,
    find_min_ac,
    is_alternating_circuit,
    min_ac_set,
    switching,
)
from cfactor.factor import (
    TutteGadget,
    build_gadget,
    f_factor,
    f_factor_with_forced,
    is_f_factor,
    min_weight_f_factor,
    min_weight_f_factor_with_forced,
)
from cfactor.fileformat import ParseError, parse_instance, serialize_instance
from cfactor.graph import (
    DegreeSpec,
    FactorSubgraph,
    Graph,
    Partition,
    QuotientGraph,
    SizeLimitError,
    ValidationError,
    connects,
    quotient,
    refine_partition,
    spanning_trees,
)
from cfactor.matching import Matching, max_cardinality_matching, min_weight_perfect_matching
from cfactor.oracle import (
    OracleResult,
    brute_force_connected_f_factor,
    enumerate_f_factors,
    has_connected_f_factor,
    has_hamiltonian_cycle,
)
from cfactor.reduction import (
    ReductionInstance,
    ReductionLayout,
    ReductionParams,
    generate_family,
    layout,
    verify_reduction,
)
from cfactor.solver import (
    FOUND,
    NO_F_FACTOR,
    UNCONNECTABLE,
    SolveResult,
    SolverInvariantError,
    SolveTrace,
    connected_f_factor,
    min_connected_f_factor,
    next_factor,
    partition_connector,
    restricted_f_factor,
)

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "FOUND",
    "NO_F_FACTOR",
    "RED",
    "UNCONNECTABLE",
    "__version__",
    "alternating_euler_tour",
    "brute_force_connected_f_factor",
    "build_gadget",
    "circuit_weight",
    "color_difference",
    "ColoredSubgraph",
    "connected_f_factor",
    "connects",
    "DegreeSpec",
    "enumerate_f_factors",
    "f_factor",
    "f_factor_with_forced",
    "FactorSubgraph",
    "find_min_ac",
    "generate_family",
    "Graph",
    "has_connected_f_factor",
    "has_hamiltonian_cycle",
    "is_alternating_circuit",
    "is_f_factor",
    "layout",
    "Matching",
    "max_cardinality_matching",
    "min_ac_set",
    "min_connected_f_factor",
    "min_weight_f_factor",
    "min_weight_f_factor_with_forced",
    "min_weight_perfect_matching",
    "next_factor",
    "OracleResult",
    "parse_instance",
    "ParseError",
    "Partition",
    "partition_connector",
    "quotient",
    "QuotientGraph",
    "ReductionInstance",
    "ReductionLayout",
    "ReductionParams",
    "refine_partition",
    "restricted_f_factor",
    "serialize_instance",
    "SizeLimitError",
    "SolveResult",
    "SolverInvariantError",
    "SolveTrace",
    "spanning_trees",
    "switching",
    "TutteGadget",
    "ValidationError",
    "verify_reduction",
]
