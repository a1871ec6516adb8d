"""Unique list-colorability toolkit for small graphs.

Decide whether a graph admits a 2-list assignment with a unique coloring,
construct certified assignments over exactly max{3, chromatic number}
colors, and exhaustively compute uniquely-list-chromatic profiles.
"""

from .coloring import (
    ColorConstraints,
    Coloring,
    ListAssignment,
    SearchBudget,
    chromatic_number,
    count_list_colorings,
    find_coloring,
    forced_distinct,
    gstar_closure,
    list_colorings,
    reduce_monochromatic_part,
)
from .errors import BudgetExceededError, GraphParseError, ListcolorError
from .graphs import (
    Graph,
    VertexSet,
    add_edge,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    encode_graph6,
    induced_subgraph,
    is_2connected,
    is_connected,
    max_degree,
    parse_graph6,
    path_graph,
    theta_graph,
    to_dot,
)
from .search import (
    ChiUResult,
    ChiUSummary,
    ConjectureReport,
    UniquenessScan,
    brute_force_u2lc,
    chi_u,
    chi_u_k,
    conjecture_check,
    enumerate_assignments,
    is_uniquely_k_t,
)
from .structure import (
    BlockClass,
    BlockDecomposition,
    ThetaSubgraph,
    block_decomposition,
    classify_block,
    contract_closed_neighborhood,
    find_chorded_cycle,
    find_degree2_vertex,
    find_induced_theta,
    find_theta_1_2_r,
    find_triangle,
)
from .ulc import (
    NotU2LC,
    SynthesisCertificate,
    case_i2_seed,
    chorded_cycle_seed,
    extend_seed,
    gv_lift,
    is_u2lc,
    lemma1_assignment,
    synthesize,
    theta_assignment,
    triangle_theta_seed,
)

__version__ = "0.1.0"
