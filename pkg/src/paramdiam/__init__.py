"""Exact graph diameter through parameterized algorithms.

The package bundles a small graph core, structural parameter estimators,
four exact diameter solvers keyed to different parameters, lower-bound
style graph constructions, and a CLI wrapping all of it.
"""

from .cograph import (
    CappedTypeVector,
    TypeRecord,
    build_types,
    component_diameters,
    solve_cograph,
)
from .constructions import (
    CnfFormula,
    ConstructionOutput,
    bipartite_girth_construction,
    bisection_construction,
    format_dimacs_cnf,
    gen_connected_er,
    gen_random_cograph_plus,
    gen_tree_plus_k,
    is_satisfiable,
    parse_dimacs_cnf,
    sat_to_diameter,
)
from .deletion import (
    ApspMatrix,
    apsp_by_bfs,
    combine_apsp,
    load_apsp,
    save_apsp,
    solve_clique_modulator,
)
from .errors import (
    CnfParseError,
    ContractViolationError,
    DisconnectedGraphError,
    DuplicateEdgeError,
    EdgeListParseError,
    EmptyClauseError,
    GenerationError,
    GraphInputError,
    InvalidModulatorError,
    ParamDiamError,
    SelfLoopError,
    VertexRangeError,
)
from .fes import (
    PathCycleDecomposition,
    WeightedDiameterInstance,
    apply_rr1,
    apply_rr2,
    case2_same_path,
    case3_path_pair,
    decompose,
    find_pending_cycles,
    max_weighted_pair_cyclic,
    reduce_exhaustively,
    solve_fes,
    weighted_diameter_oracle,
)
from .graph import (
    UNREACHABLE,
    DistanceRow,
    Graph,
    bfs,
    connected_components,
    eccentricity,
    format_edge_list,
    from_edge_list,
    girth,
    induced_subgraph,
    is_bipartite,
    is_connected,
    load_edge_list,
    naive_diameter,
    parse_edge_list,
    require_connected,
    save_edge_list,
)
from .hindex import solve_hd, truncated_bfs_count
from .params import (
    ModulatorResult,
    clique_modulator_2approx,
    cograph_modulator,
    feedback_edge_set,
    find_induced_p4,
    h_index,
    hub_set,
    parameter_report,
)

__version__ = "0.1.0"

__all__ = [
    "ApspMatrix",
    "CappedTypeVector",
    "CnfFormula",
    "CnfParseError",
    "ConstructionOutput",
    "ContractViolationError",
    "DisconnectedGraphError",
    "DistanceRow",
    "DuplicateEdgeError",
    "EdgeListParseError",
    "EmptyClauseError",
    "GenerationError",
    "Graph",
    "GraphInputError",
    "InvalidModulatorError",
    "ModulatorResult",
    "ParamDiamError",
    "PathCycleDecomposition",
    "SelfLoopError",
    "TypeRecord",
    "UNREACHABLE",
    "VertexRangeError",
    "WeightedDiameterInstance",
    "apply_rr1",
    "apply_rr2",
    "apsp_by_bfs",
    "bfs",
    "bipartite_girth_construction",
    "bisection_construction",
    "build_types",
    "case2_same_path",
    "case3_path_pair",
    "clique_modulator_2approx",
    "cograph_modulator",
    "combine_apsp",
    "component_diameters",
    "connected_components",
    "decompose",
    "eccentricity",
    "feedback_edge_set",
    "find_induced_p4",
    "find_pending_cycles",
    "format_dimacs_cnf",
    "format_edge_list",
    "from_edge_list",
    "gen_connected_er",
    "gen_random_cograph_plus",
    "gen_tree_plus_k",
    "girth",
    "h_index",
    "hub_set",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_satisfiable",
    "load_apsp",
    "load_edge_list",
    "max_weighted_pair_cyclic",
    "naive_diameter",
    "parameter_report",
    "parse_dimacs_cnf",
    "parse_edge_list",
    "reduce_exhaustively",
    "require_connected",
    "save_apsp",
    "save_edge_list",
    "sat_to_diameter",
    "solve_cograph",
    "solve_clique_modulator",
    "solve_fes",
    "solve_hd",
    "truncated_bfs_count",
    "weighted_diameter_oracle",
]
