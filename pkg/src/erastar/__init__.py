"""ERA* grid path planning with A*, relaxed A* and Dijkstra baselines."""

from .baselines import astar_t, dijkstra, ra_star_wot
from .grid import (
    MOVES,
    Cell,
    CornerRule,
    GridMap,
    Move,
    format_movingai_map,
    generate_random_map,
    load_map,
    neighbors,
    parse_movingai_map,
    save_map,
)
from .penalty import (
    PenaltyTables,
    RegimeId,
    build_penalty_tables,
    classify_regime,
    default_tables,
    incremental_penalty,
    lookup_penalty,
    octile_h,
)
from .result import PathResult, check_path
from .search import SearchState, check_d_identity, era_star, era_star_search, reconstruct_path
from .surd import Surd

__all__ = [
    "MOVES", "Cell", "CornerRule", "GridMap", "Move", "PathResult", "PenaltyTables",
    "RegimeId", "SearchState", "Surd", "astar_t", "build_penalty_tables", "check_d_identity",
    "check_path", "classify_regime", "default_tables", "dijkstra", "era_star",
    "era_star_search", "format_movingai_map", "generate_random_map", "incremental_penalty",
    "load_map", "lookup_penalty", "neighbors", "octile_h", "parse_movingai_map",
    "ra_star_wot", "reconstruct_path", "save_map",
]
