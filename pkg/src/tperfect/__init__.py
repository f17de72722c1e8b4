"""Recognition, certification, and 3-coloring of t-perfect fork-free graphs,
with exact brute-force oracles (t-minor search and rational polytope
vertex enumeration) for independent verification at small orders."""

from .graph import (
    Graph,
    GraphError,
    are_isomorphic,
    build_graph,
    canonical_code,
    complement,
    connected_components,
    delete_vertices,
    duplicate_vertex,
    enumerate_nonisomorphic,
    format_edge_list,
    format_graph6,
    induced_subgraph,
    is_clique,
    is_independent_set,
    parse_edge_list,
    parse_graph6,
)
from .patterns import (
    claw,
    complete,
    contains_any_forbidden,
    contains_claw,
    cycle,
    cycle_square,
    c7_squared,
    c10_squared,
    figure3,
    find_induced,
    fork,
    is_fork_free,
    named_graph,
    path,
    verify_embedding,
    wheel,
)
from .holes import (
    Hole,
    HolePartition,
    PartitionViolation,
    StarReport,
    StructureReport,
    enumerate_induced_cycles,
    enumerate_induced_odd_cycles,
    find_odd_hole,
    hole_partition,
    independent_sets,
    maximal_independent_sets,
    satisfies_star,
    validate_structure,
)
from .tminor import (
    ContractionError,
    INCONCLUSIVE,
    SearchBudgetExhausted,
    TMinorCertificate,
    TMinorSearch,
    has_forbidden_t_minor,
    replay,
    t_contract,
    target_catalog,
    verify_certificate,
)
from .polytope import (
    ConstraintSystem,
    Row,
    StrongCheckReport,
    WCover,
    alpha_w,
    build_system,
    enumerate_odd_cycles,
    enumerate_vertices,
    min_w_cover,
    strong_t_perfect_check,
    t_perfect_oracle,
)
from .recognize import (
    ForkInputError,
    INCONCLUSIVE_ANSWER,
    NOT_T_PERFECT,
    T_PERFECT,
    Verdict,
    recognize,
)
from .color import Coloring, ColoringError, exact_k_color, three_color

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
