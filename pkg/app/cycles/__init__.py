from app.cycles.space import (
    Cycle,
    CycleSystem,
    EdgeSet,
    bfs_levels,
    cycle_vectors,
    enumerate_isometric_cycles,
    gf2_rank,
    is_isometric,
    sym_diff,
    xor_all,
)

__all__ = [
    "Cycle",
    "CycleSystem",
    "EdgeSet",
    "bfs_levels",
    "cycle_vectors",
    "enumerate_isometric_cycles",
    "gf2_rank",
    "is_isometric",
    "sym_diff",
    "xor_all",
]
