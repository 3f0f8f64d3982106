"""
Cycle space over GF(2): edge subsets as int bitsets, simple cycles, the
isometric-cycle enumeration and the per-edge / per-vertex count vectors.

Bit ``e - 1`` of ``EdgeSet.bits`` stands for edge e.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from app.errors import CycleError, GraphError
from app.graph.core import Graph, require_biconnected
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class EdgeSet:
    m: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.m:
            raise CycleError(f"edge set has support outside 1..{self.m}")

    @classmethod
    def from_ids(cls, m: int, ids: Iterable[int]) -> "EdgeSet":
        bits = 0
        for e in ids:
            if not 1 <= e <= m:
                raise CycleError(f"edge id e{e} out of range 1..{m}")
            bits |= 1 << (e - 1)
        return cls(m, bits)

    def ids(self) -> tuple[int, ...]:
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length())
            bits ^= low
        return tuple(out)

    def __iter__(self) -> Iterator[int]:
        return iter(self.ids())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: object) -> bool:
        return isinstance(e, int) and 1 <= e <= self.m and bool(self.bits >> (e - 1) & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        return sym_diff(self, other)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        _check_same(self, other)
        return EdgeSet(self.m, self.bits & other.bits)

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        _check_same(self, other)
        return EdgeSet(self.m, self.bits | other.bits)

    def issubset(self, other: "EdgeSet") -> bool:
        _check_same(self, other)
        return self.bits & ~other.bits == 0

    def __repr__(self) -> str:
        return "EdgeSet{" + ",".join(f"e{e}" for e in self.ids()) + "}"


def _check_same(a: EdgeSet, b: EdgeSet) -> None:
    if a.m != b.m:
        raise CycleError(f"edge sets over different edge counts ({a.m} vs {b.m})")


def sym_diff(a: EdgeSet, b: EdgeSet) -> EdgeSet:
    _check_same(a, b)
    return EdgeSet(a.m, a.bits ^ b.bits)


def xor_all(m: int, sets: Iterable[EdgeSet]) -> EdgeSet:
    bits = 0
    for s in sets:
        if s.m != m:
            raise CycleError(f"edge sets over different edge counts ({s.m} vs {m})")
        bits ^= s.bits
    return EdgeSet(m, bits)


@dataclass(frozen=True, slots=True)
class Cycle:
    edges: EdgeSet
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edge_ids(self) -> tuple[int, ...]:
        return self.edges.ids()

    @classmethod
    def from_edges(cls, g: Graph, ids: Iterable[int]) -> "Cycle":
        """Walk the incidences of an edge set; orientation starts at the smallest
        vertex and heads to its smaller-id neighbor."""
        edges = EdgeSet.from_ids(g.m, ids)
        ring: dict[int, list[int]] = {}
        for e in edges:
            u, v = g.ends(e)
            ring.setdefault(u, []).append(v)
            ring.setdefault(v, []).append(u)
        if len(edges) < 3:
            raise CycleError(f"{edges!r} is too short to be a cycle")
        for v, nbrs in ring.items():
            if len(nbrs) != 2:
                raise CycleError(f"{edges!r} is not a simple cycle (v{v} has degree {len(nbrs)})")
        start = min(ring)
        seq = [start]
        prev, cur = start, min(ring[start])
        while cur != start:
            seq.append(cur)
            a, b = ring[cur]
            prev, cur = cur, (b if a == prev else a)
        if len(seq) != len(edges):
            raise CycleError(f"{edges!r} splits into several cycles")
        return cls(edges=edges, vertices=tuple(seq))

    @classmethod
    def from_vertices(cls, g: Graph, seq: Sequence[int]) -> "Cycle":
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise CycleError(f"vertex sequence {list(seq)} is not a simple cycle")
        try:
            ids = [g.edge_id(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
        except GraphError as exc:
            raise CycleError(str(exc)) from exc
        return cls.from_edges(g, ids)


@dataclass(frozen=True, slots=True, eq=False)
class CycleSystem:
    """Ordered cycles of one graph with their cycle–edge / cycle–vertex matrices."""

    graph: Graph
    cycles: tuple[Cycle, ...]
    edge_matrix: np.ndarray = field(init=False, repr=False)
    vertex_matrix: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        g = self.graph
        em = np.zeros((len(self.cycles), g.m), dtype=np.int64)
        vm = np.zeros((len(self.cycles), g.n), dtype=np.int64)
        for k, c in enumerate(self.cycles):
            if c.edges.m != g.m:
                raise CycleError(f"cycle {k} belongs to a graph with {c.edges.m} edges")
            em[k, [e - 1 for e in c.edges]] = 1
            vm[k, [v - 1 for v in c.vertices]] = 1
        object.__setattr__(self, "edge_matrix", em)
        object.__setattr__(self, "vertex_matrix", vm)

    def __len__(self) -> int:
        return len(self.cycles)

    def __getitem__(self, k: int) -> Cycle:
        return self.cycles[k]

    @property
    def p_e(self) -> np.ndarray:
        return self.edge_matrix.sum(axis=0)

    @property
    def p_v(self) -> np.ndarray:
        return self.vertex_matrix.sum(axis=0)

    @classmethod
    def from_edge_lists(cls, g: Graph, lists: Iterable[Iterable[int]]) -> "CycleSystem":
        """Keeps the caller's order."""
        return cls(graph=g, cycles=tuple(Cycle.from_edges(g, ids) for ids in lists))

    def subset(self, indices: Iterable[int]) -> "CycleSystem":
        return CycleSystem(graph=self.graph, cycles=tuple(self.cycles[k] for k in indices))

    def indices(self, active: Iterable[int] | None = None) -> list[int]:
        if active is None:
            return list(range(len(self.cycles)))
        out = sorted(set(active))
        if out and (out[0] < 0 or out[-1] >= len(self.cycles)):
            raise CycleError(f"cycle mask {out} out of range 0..{len(self.cycles) - 1}")
        return out

    def xor(self, members: Iterable[int]) -> EdgeSet:
        return xor_all(self.graph.m, (self.cycles[k].edges for k in members))


def cycle_vectors(sys: CycleSystem, active: Iterable[int] | None = None) -> tuple[np.ndarray, np.ndarray]:
    """(p_e, p_v) restricted to the active cycles; entry i counts edge i+1 / vertex i+1."""
    rows = sys.indices(active)
    return sys.edge_matrix[rows].sum(axis=0), sys.vertex_matrix[rows].sum(axis=0)


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of int bitset rows (xor basis keyed by leading bit)."""
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = row
                break
            row ^= basis[top]
    return len(basis)


# ── Waves and distances ─────────────────────────────────────


def bfs_levels(g: Graph, v1: int, v2: int) -> tuple[int, ...]:
    """Wave depth per vertex (index v-1): v1 gets 1, v2 gets 2, the wave then
    spreads from v2 level by level without re-entering v1."""
    if v1 == v2 or not g.has_edge(v1, v2):
        raise GraphError(f"wave needs an edge, got v{v1}, v{v2}")
    depth = [0] * (g.n + 1)
    depth[v1] = 1
    depth[v2] = 2
    queue = deque([v2])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if not depth[y]:
                depth[y] = depth[x] + 1
                queue.append(y)
    if not all(depth[1:]):
        missing = [v for v in g.vertices() if not depth[v]]
        raise GraphError(f"wave from (v{v1}, v{v2}) does not reach {missing}")
    return tuple(depth[1:])


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances indexed by vertex id (index 0 unused); -1 means unreachable."""
    dist = [-1] * (g.n + 1)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_distances(g: Graph) -> list[list[int]]:
    return [[]] + [distances_from(g, v) for v in g.vertices()]


def is_isometric(g: Graph, c: Cycle, dist: list[list[int]] | None = None) -> bool:
    seq = c.vertices
    size = len(seq)
    if c.edges.m != g.m or any(not g.has_edge(seq[i], seq[(i + 1) % size]) for i in range(size)):
        raise CycleError("cycle does not belong to this graph")
    dist = dist or all_distances(g)
    for i in range(size):
        row = dist[seq[i]]
        for j in range(i + 1, size):
            along = min(j - i, size - (j - i))
            if row[seq[j]] != along:
                return False
    return True


def _side_paths(g: Graph, root: int, own: list[int], other: list[int]) -> dict[int, list[list[int]]]:
    """Geodesic paths from ``root`` that stay strictly closer to ``root`` than to
    the other end of the edge, plus one final step onto an equidistant apex.

    Keys are path endpoints; each path starts at root.
    """
    paths: dict[int, list[list[int]]] = {root: [[root]]}
    frontier = [root]
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            if own[x] == other[x]:
                continue
            for y in g.neighbors(x):
                if own[y] != own[x] + 1 or other[y] < own[y]:
                    continue
                if y not in paths:
                    paths[y] = []
                    nxt.append(y)
                paths[y].extend(p + [y] for p in paths[x])
        frontier = nxt
    return paths


def enumerate_isometric_cycles(g: Graph) -> CycleSystem:
    """All isometric cycles of a 2-connected graph.

    Per edge (u, v) two waves are grown, one from each end; odd cycles close
    on an apex equidistant from both ends, even cycles on an edge joining the
    two wave fronts. Candidates are checked against the distance matrix and
    deduplicated by edge set. Output is sorted by ascending edge-id list.
    """
    require_biconnected(g)
    dist = all_distances(g)
    found: dict[int, Cycle] = {}
    for e in g.edges():
        u, v = g.ends(e)
        du, dv = dist[u], dist[v]
        from_u = _side_paths(g, u, du, dv)
        from_v = _side_paths(g, v, dv, du)

        candidates: list[list[int]] = []
        for w, pu in from_u.items():
            if du[w] != dv[w] or w not in from_v:
                continue
            for p in pu:
                for q in from_v[w]:
                    candidates.append(p + q[-2::-1])
        for a, pa in from_u.items():
            if du[a] == dv[a]:
                continue
            for b in g.neighbors(a):
                if b not in from_v or dv[b] != du[a] or dv[b] == du[b] or du[b] != du[a] + 1:
                    continue
                for p in pa:
                    for q in from_v[b]:
                        candidates.append(p + q[::-1])

        for seq in candidates:
            if len(seq) < 3 or len(set(seq)) != len(seq):
                continue
            ids = [g.edge_id(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))]
            key = EdgeSet.from_ids(g.m, ids).bits
            if key in found:
                continue
            cycle = Cycle.from_edges(g, ids)
            if is_isometric(g, cycle, dist):
                found[key] = cycle

    ordered = sorted(found.values(), key=lambda c: c.edge_ids())
    logger.debug("enumerate_isometric_cycles: n=%d m=%d -> %d cycles", g.n, g.m, len(ordered))
    return CycleSystem(graph=g, cycles=tuple(ordered))
