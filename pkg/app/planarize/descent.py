"""
Descent engines over a cycle system.

- steepest_descent_basis: bỏ dần chu trình theo F nhỏ nhất cho tới khi còn ν chu trình.
- cubic_descent: từ một cơ sở, bỏ chu trình làm mất đúng một cạnh, theo FP nhỏ nhất.
- fragmentary_greedy: lắp dần từng chu trình kề với vành ngoài (rim).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from app.cycles.space import Cycle, CycleSystem, EdgeSet, gf2_rank
from app.errors import CycleError
from app.maclane import cubic_of, euler_check, quadratic_of
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(slots=True)
class DescentStep:
    removed_cycle: int
    functional_after: int
    edges_deleted: frozenset[int] = frozenset()
    vetoed: list[int] = field(default_factory=list)


@dataclass(slots=True)
class BasisDescent:
    mask: frozenset[int]
    trace: list[DescentStep]
    complete: bool


@dataclass(slots=True)
class PlanarResult:
    kept_cycles: frozenset[int]
    deleted_edges: frozenset[int]
    rim: EdgeSet
    edge_count: int
    trace: list[DescentStep] = field(default_factory=list)
    seed: int | None = None
    permutation: list[int] | None = None
    restart: int = 0
    ok: bool = True

    @property
    def edges_kept(self) -> int:
        return self.edge_count - len(self.deleted_edges)

    @property
    def sort_key(self) -> tuple[int, int, tuple[int, ...], int]:
        """Total order: successes first, fewer deletions, smaller deleted set, earlier restart."""
        return (0 if self.ok else 1, len(self.deleted_edges), tuple(sorted(self.deleted_edges)), self.restart)


def _uncovered(p_e: np.ndarray) -> frozenset[int]:
    return frozenset(int(i) + 1 for i in np.flatnonzero(p_e == 0))


def _is_disk(sys: CycleSystem, active: Iterable[int], rim: EdgeSet) -> bool:
    """Independent cycles, Euler residual 0 and a simple rim: one plane fragment."""
    rows = sorted(active)
    if gf2_rank(sys[k].edges.bits for k in rows) != len(rows) or euler_check(sys, rows) != 0:
        return False
    try:
        Cycle.from_edges(sys.graph, rim.ids())
    except CycleError:
        return False
    return True


def steepest_descent_basis(sys: CycleSystem, nu: int, *, cover_edges: bool = False) -> BasisDescent:
    """Drop one cycle at a time, always the one leaving the smallest F.

    A removal that uncovers a vertex is vetoed and the next candidate is taken.
    ``cover_edges=True`` also vetoes a removal that uncovers an edge (the basis
    rule "no zero in P_e"). Ties: longest cycle, then lowest index.
    """
    active = set(range(len(sys)))
    p_e = sys.edge_matrix.sum(axis=0)
    p_v = sys.vertex_matrix.sum(axis=0)
    trace: list[DescentStep] = []
    while len(active) > nu:
        ranked: list[tuple[int, int, int, bool]] = []
        for k in sorted(active):
            after_e = p_e - sys.edge_matrix[k]
            after_v = p_v - sys.vertex_matrix[k]
            veto = bool(((after_v == 0) & (p_v > 0)).any())
            if cover_edges and not veto:
                veto = bool(((after_e == 0) & (p_e > 0)).any())
            ranked.append((quadratic_of(after_e), -sys[k].length, k, veto))
        ranked.sort()
        vetoed = [k for _, _, k, veto in ranked if veto]
        chosen = next(((f, k) for f, _, k, veto in ranked if not veto), None)
        if chosen is None:
            logger.warning("steepest_descent_basis: every removal vetoed at %d cycles (target %d)", len(active), nu)
            return BasisDescent(mask=frozenset(active), trace=trace, complete=False)
        f_after, k = chosen
        active.discard(k)
        p_e = p_e - sys.edge_matrix[k]
        p_v = p_v - sys.vertex_matrix[k]
        trace.append(DescentStep(removed_cycle=k, functional_after=f_after, vetoed=vetoed))
        logger.debug("steepest descent: drop cycle %d -> F=%d (vetoed %s)", k, f_after, vetoed)
    return BasisDescent(mask=frozenset(active), trace=trace, complete=True)


def cubic_descent(sys: CycleSystem, basis_mask: Iterable[int]) -> PlanarResult:
    """Delete edges one at a time by dropping basis cycles until FP = 0.

    A removal is admissible when it zeroes exactly one edge count; one that
    zeroes several is admissible only if the Euler residual stays 0.
    Choice: smallest FP, then fewer deleted edges, then lowest index.
    """
    active = set(basis_mask)
    p_e = sys.edge_matrix[sorted(active)].sum(axis=0) if active else np.zeros(sys.graph.m, dtype=np.int64)
    fp = cubic_of(p_e)
    trace: list[DescentStep] = []
    ok = True
    while fp > 0:
        best: tuple[int, int, int, frozenset[int]] | None = None
        vetoed: list[int] = []
        for k in sorted(active):
            after = p_e - sys.edge_matrix[k]
            zeroed = frozenset(int(i) + 1 for i in np.flatnonzero((after == 0) & (p_e > 0)))
            admissible = len(zeroed) == 1 or (
                len(zeroed) >= 2 and euler_check(sys, active - {k}) == 0
            )
            if not admissible:
                vetoed.append(k)
                continue
            key = (cubic_of(after), len(zeroed), k, zeroed)
            if best is None or key[:3] < best[:3]:
                best = key
        if best is None:
            logger.info("cubic_descent stuck at FP=%d with %d cycles", fp, len(active))
            ok = False
            break
        fp, _, k, zeroed = best
        active.discard(k)
        p_e = p_e - sys.edge_matrix[k]
        trace.append(DescentStep(removed_cycle=k, functional_after=fp, edges_deleted=zeroed, vetoed=vetoed))
        logger.debug("cubic descent: drop cycle %d, delete %s -> FP=%d", k, sorted(zeroed), fp)

    rim = sys.xor(sorted(active))
    if ok and not _is_disk(sys, active, rim):
        logger.info("cubic_descent: FP=0 but the kept cycles are not one plane fragment (rim %s)", list(rim.ids()))
        ok = False
    return PlanarResult(
        kept_cycles=frozenset(active),
        deleted_edges=_uncovered(p_e),
        rim=rim,
        edge_count=sys.graph.m,
        trace=trace,
        ok=ok,
    )


def fragmentary_greedy(sys: CycleSystem, order: Sequence[int]) -> PlanarResult:
    """Grow a plane fragment cycle by cycle along its rim.

    A cycle joins when it shares an edge with the rim (the first one is free),
    leaves a non-empty rim, and keeps both F and the Euler residual at 0.
    After each acceptance the rejected cycles are rescanned from the start.
    """
    m = sys.graph.m
    chosen: list[int] = []
    rim = EdgeSet(m)
    p_e = np.zeros(m, dtype=np.int64)

    def fits(k: int) -> bool:
        edges = sys[k].edges
        if chosen and not (edges & rim):
            return False
        if not (rim ^ edges):
            return False
        if quadratic_of(p_e + sys.edge_matrix[k]) != 0:
            return False
        return euler_check(sys, chosen + [k]) == 0

    rejected: list[int] = []
    for k in order:
        if not fits(k):
            rejected.append(k)
            continue
        while True:
            chosen.append(k)
            rim = rim ^ sys[k].edges
            p_e = p_e + sys.edge_matrix[k]
            k = next((r for r in rejected if fits(r)), -1)
            if k < 0:
                break
            rejected.remove(k)

    logger.debug("fragmentary greedy kept %s, rim %s", chosen, rim.ids())
    return PlanarResult(
        kept_cycles=frozenset(chosen),
        deleted_edges=_uncovered(p_e),
        rim=rim,
        edge_count=m,
        permutation=list(order),
    )
