"""Proper distinguishing labelings: constructions with at most Delta+1 labels
and exact solvers to check them against."""
from .autom import (
    AutGroup,
    BudgetExceeded,
    automorphism_group,
    exists_color_preserving_nonidentity,
    generators_preserve,
    orbits,
    refine,
)
from .constructive import (
    ConstructionDefect,
    LevelAssignmentState,
    label_auto,
    label_bipartite_girth6,
    label_cycle,
    label_rooted_tree,
    label_tree,
    label_unicyclic,
    transfer_to_spanning_subgraph,
)
from .exact import (
    ExactResult,
    chromatic_number,
    distinguishing_chromatic_number,
    distinguishing_number,
    scan_conjecture,
)
from .graph import FamilySpec, Graph, generate, parse_dimacs, parse_graph6, to_dimacs, to_graph6
from .labeling import Labeling, is_distinguishing, is_proper, verify
from .structure import (
    ACYCLIC,
    PreconditionError,
    bfs_tree,
    bipartition,
    check_observation,
    girth,
    is_connected,
    unique_cycle,
)

__version__ = "0.1.0"
