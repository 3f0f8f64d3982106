"""
MacLane functionals over a cycle system.

``a_i`` là số chu trình (đang hoạt động) đi qua cạnh i. Hàm bậc hai F chỉ cộng
trên các cạnh được phủ; hàm bậc ba FP cộng trên mọi cạnh. Tất cả là số nguyên.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from app.cycles.space import CycleSystem, cycle_vectors


@dataclass(slots=True)
class FunctionalReport:
    cycle_count: int
    f_quadratic: int
    fp_cubic: int
    covered_edges: int
    covered_vertices: int
    euler_residual: int


def quadratic_of(p_e: np.ndarray) -> int:
    a = p_e[p_e > 0]
    return int(((a - 1) * (a - 2)).sum())


def cubic_of(p_e: np.ndarray) -> int:
    return int((p_e * (p_e - 1) * (p_e - 2)).sum())


def maclane_f(sys: CycleSystem, mask: Iterable[int] | None = None) -> int:
    p_e, _ = cycle_vectors(sys, mask)
    return quadratic_of(p_e)


def maclane_fp(sys: CycleSystem, mask: Iterable[int] | None = None) -> int:
    p_e, _ = cycle_vectors(sys, mask)
    return cubic_of(p_e)


def euler_check(sys: CycleSystem, mask: Iterable[int] | None = None) -> int:
    """k - m' + n' - 1 over the covered edges and vertices; 0 when Euler holds."""
    rows = sys.indices(mask)
    p_e, p_v = cycle_vectors(sys, rows)
    return len(rows) - int((p_e > 0).sum()) + int((p_v > 0).sum()) - 1


def functional_report(sys: CycleSystem, mask: Iterable[int] | None = None) -> FunctionalReport:
    rows = sys.indices(mask)
    p_e, p_v = cycle_vectors(sys, rows)
    covered_edges = int((p_e > 0).sum())
    covered_vertices = int((p_v > 0).sum())
    return FunctionalReport(
        cycle_count=len(rows),
        f_quadratic=quadratic_of(p_e),
        fp_cubic=cubic_of(p_e),
        covered_edges=covered_edges,
        covered_vertices=covered_vertices,
        euler_residual=len(rows) - covered_edges + covered_vertices - 1,
    )


def is_plane_configuration(sys: CycleSystem, members: Sequence[int]) -> bool:
    """XOR of the members is empty and F over them is zero.

    A repeated index counts twice, so ``[k, k]`` is a (degenerate) plane
    configuration.
    """
    rows = list(members)
    if not rows:
        return False
    if sys.xor(rows):
        return False
    p_e = sys.edge_matrix[rows].sum(axis=0)
    return quadratic_of(p_e) == 0
