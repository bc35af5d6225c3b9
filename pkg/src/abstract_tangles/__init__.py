"""Tangle search, tangle-tree duality and trees of tangles for abstract separation systems."""

from .bipartition import BipartitionUniverse, WeightedGraph, build_universe
from .core import (
    OrientedSep,
    Separation,
    Universe,
    corners,
    is_consistent,
    is_consistent_pair,
    is_nested,
    is_star,
    trivial_orientations,
)
from .duality import ForcedList, STree, build_stree, forcing_pass, run_duality, validate_stree
from .forbidden import CoverOracle, ExplicitF, is_standard, stars_only
from .search import SearchResult, can_add, layered_search, maximal_tangles, seeded_search
from .tot import (
    ExtendedTangle,
    ToTState,
    can_extend,
    classify_cross,
    find_distinguisher,
    quasi_key,
    run_tot,
    tree_of_tangles,
    validate_tot_output,
)

__version__ = "0.1.0"
