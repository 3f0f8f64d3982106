"""
Đồ thị vô hướng đơn, bất biến, với cách đánh số cạnh chuẩn.

Đỉnh và cạnh đánh số từ 1 (quy ước của các file .grf/.gr1). Bên trong dùng
tuple theo chỉ số 0: ``adjacency[v - 1]`` là danh sách kề của đỉnh v,
``incidence[v - 1][k]`` là số hiệu cạnh của ô kề thứ k, ``edge_ends[e - 1]``
là cặp đỉnh (nhỏ, lớn) của cạnh e.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from app.errors import GraphError
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...]
    edge_ends: tuple[tuple[int, int], ...]
    _edge_index: dict[tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self._edge_index:
            for e, (u, v) in enumerate(self.edge_ends, start=1):
                self._edge_index[(u, v)] = e

    @property
    def m(self) -> int:
        return len(self.edge_ends)

    @property
    def cyclomatic_number(self) -> int:
        return self.m - self.n + 1

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> range:
        return range(1, self.m + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v - 1]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v - 1])

    def ends(self, e: int) -> tuple[int, int]:
        return self.edge_ends[e - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise GraphError(f"no edge between v{u} and v{v}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edge_ends[e - 1]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"v{v} is not an end of e{e}")

    def subgraph_edges(self, mask: Iterable[int]) -> list[tuple[int, int]]:
        """Vertex pairs of the given edge ids, in the given order."""
        return [self.edge_ends[e - 1] for e in mask]

    def to_networkx(self, edges: Iterable[int] | None = None) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(self.vertices())
        for e in edges if edges is not None else self.edges():
            u, v = self.edge_ends[e - 1]
            nxg.add_edge(u, v, id=e)
        return nxg

    # ── Constructors ───────────────────────────────────────────

    @classmethod
    def from_adjacency(cls, n: int, lists: Sequence[Sequence[int]]) -> "Graph":
        """Build from 1-based neighbor rows; edges numbered row by row, lower endpoint first.

        Quét đỉnh tăng dần, mỗi hàng từ trái sang phải: ô chưa đánh số nhận số
        cạnh kế tiếp, ô đối xứng ở đầu kia nhận cùng số.
        """
        if len(lists) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(lists)}")
        rows = [tuple(int(u) for u in row) for row in lists]
        for v, row in enumerate(rows, start=1):
            if len(set(row)) != len(row):
                raise GraphError(f"duplicate neighbor in row of v{v}")
            for u in row:
                if not 1 <= u <= n:
                    raise GraphError(f"neighbor {u} of v{v} out of range 1..{n}")
                if u == v:
                    raise GraphError(f"self-loop at v{v}")
        for v, row in enumerate(rows, start=1):
            for u in row:
                if v not in rows[u - 1]:
                    raise GraphError(f"asymmetric adjacency: v{v} lists v{u} but not vice versa")

        slots: list[list[int]] = [[0] * len(row) for row in rows]
        ends: list[tuple[int, int]] = []
        for v, row in enumerate(rows, start=1):
            for k, u in enumerate(row):
                if slots[v - 1][k]:
                    continue
                ends.append((min(u, v), max(u, v)))
                e = len(ends)
                slots[v - 1][k] = e
                slots[u - 1][rows[u - 1].index(v)] = e
        return cls(
            n=n,
            adjacency=tuple(rows),
            incidence=tuple(tuple(r) for r in slots),
            edge_ends=tuple(ends),
        )

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Edges numbered in the order given; adjacency rows in insertion order."""
        rows: list[list[int]] = [[] for _ in range(n)]
        slots: list[list[int]] = [[] for _ in range(n)]
        ends: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at v{u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
            ends.append(key)
            e = len(ends)
            rows[u - 1].append(v)
            slots[u - 1].append(e)
            rows[v - 1].append(u)
            slots[v - 1].append(e)
        return cls(
            n=n,
            adjacency=tuple(tuple(r) for r in rows),
            incidence=tuple(tuple(r) for r in slots),
            edge_ends=tuple(ends),
        )


@dataclass(slots=True)
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_nonseparable(g: Graph) -> ValidationReport:
    """Report every reason g falls outside the admissible input class."""
    report = ValidationReport()
    low = [v for v in g.vertices() if g.degree(v) < 3]
    if low:
        report.violations.append("degree<3: " + " ".join(f"v{v}" for v in low))
    nxg = g.to_networkx()
    if g.n == 0 or not nx.is_connected(nxg):
        report.violations.append("disconnected")
        return report
    bridges = sorted(g.edge_id(u, v) for u, v in nx.bridges(nxg))
    if bridges:
        report.violations.append("bridge: " + " ".join(f"e{e}" for e in bridges))
    cuts = sorted(nx.articulation_points(nxg))
    if cuts:
        report.violations.append("cut vertex: " + " ".join(f"v{v}" for v in cuts))
    if report.violations:
        logger.debug("validate_nonseparable: %s", "; ".join(report.violations))
    return report


def require_biconnected(g: Graph) -> None:
    """Raise GraphError unless g is connected without bridges or cut vertices."""
    nxg = g.to_networkx()
    if g.n < 3 or not nx.is_biconnected(nxg):
        raise GraphError("graph is separable (needs to be 2-connected)")


@dataclass(frozen=True, slots=True)
class SpanningTreeSplit:
    tree_edges: frozenset[int]
    chords: frozenset[int]

    @classmethod
    def from_tree_edges(cls, g: Graph, ids: Iterable[int]) -> "SpanningTreeSplit":
        tree = frozenset(ids)
        if len(tree) != g.n - 1:
            raise GraphError(f"spanning tree needs {g.n - 1} edges, got {len(tree)}")
        parent = list(range(g.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in sorted(tree):
            if not 1 <= e <= g.m:
                raise GraphError(f"edge id e{e} out of range")
            a, b = (find(x) for x in g.ends(e))
            if a == b:
                raise GraphError(f"tree edges contain a cycle at e{e}")
            parent[a] = b
        return cls(tree_edges=tree, chords=frozenset(g.edges()) - tree)


def spanning_split(g: Graph) -> SpanningTreeSplit:
    """DFS tree from v1 following adjacency order; chords are the rest."""
    if g.n == 0:
        raise GraphError("empty graph")
    visited = [False] * (g.n + 1)
    visited[1] = True
    tree: list[int] = []
    stack: list[tuple[int, int]] = [(1, 0)]
    while stack:
        v, k = stack[-1]
        row = g.adjacency[v - 1]
        if k == len(row):
            stack.pop()
            continue
        stack[-1] = (v, k + 1)
        u = row[k]
        if not visited[u]:
            visited[u] = True
            tree.append(g.incidence[v - 1][k])
            stack.append((u, 0))
    if len(tree) != g.n - 1:
        raise GraphError("graph is disconnected; no spanning tree")
    split = SpanningTreeSplit(tree_edges=frozenset(tree), chords=frozenset(g.edges()) - frozenset(tree))
    logger.debug("spanning_split: tree=%s chords=%s", sorted(split.tree_edges), sorted(split.chords))
    return split
