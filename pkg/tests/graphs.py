"""Reference graphs and golden files shared by the test modules."""

from __future__ import annotations

import itertools

import numpy as np

from app.cycles.space import Cycle, CycleSystem
from app.graph.core import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def dense_gf2_rank(matrix: np.ndarray) -> int:
    """Plain row reduction over GF(2), used as an oracle."""
    m = matrix.copy() % 2
    rank = 0
    for col in range(m.shape[1]):
        pivot = next((r for r in range(rank, m.shape[0]) if m[r, col]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(m.shape[0]):
            if r != rank and m[r, col]:
                m[r] ^= m[rank]
        rank += 1
    return rank


def cyclic_equal(a, b) -> bool:
    """Same cyclic sequence up to rotation and reflection."""
    a, b = list(a), list(b)
    if len(a) != len(b):
        return False
    doubled = a + a
    for seq in (b, b[::-1]):
        if any(doubled[i: i + len(a)] == seq for i in range(len(a))):
            return True
    return False


# ── K5: ten triangles, edges e1=12 e2=13 e3=14 e4=15 e5=23 e6=24 e7=25 e8=34 e9=35 e10=45 ──

K5_TRIANGLES = [
    [1, 2, 5], [1, 3, 6], [1, 4, 7], [2, 3, 8], [2, 4, 9],
    [3, 4, 10], [5, 6, 8], [5, 7, 9], [6, 7, 10], [8, 9, 10],
]


# ── G1: 6 vertices, 13 edges, 13 triangles ──

G1_EDGES = [(1, 2), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6), (5, 6)]
G1_CYCLES = [
    [1, 2, 6], [1, 3, 7], [1, 4, 8], [2, 3, 11], [2, 4, 12], [3, 4, 13], [5, 6, 9],
    [5, 8, 10], [6, 7, 11], [6, 8, 12], [7, 8, 13], [9, 10, 12], [11, 12, 13],
]
G1_TREE = [1, 5, 9, 12, 13]
G1_RIM = [1, 2, 5, 10, 11, 13]


def g1() -> tuple[Graph, CycleSystem]:
    g = Graph.from_edges(6, G1_EDGES)
    return g, CycleSystem.from_edge_lists(g, G1_CYCLES)


# ── G3: 11 vertices, 20 edges, 17 isometric cycles in listing order ──

G3_EDGES = [
    (1, 2), (1, 3), (1, 6), (1, 8), (2, 5), (2, 9), (3, 4), (3, 7), (4, 6), (4, 7),
    (5, 6), (5, 7), (6, 7), (7, 8), (7, 11), (8, 9), (8, 10), (9, 10), (9, 11), (10, 11),
]
G3_CYCLES = [
    [1, 3, 5, 11], [1, 4, 6, 16], [2, 3, 7, 9], [2, 3, 8, 13], [2, 4, 8, 14], [3, 4, 13, 14],
    [5, 6, 12, 14, 16], [5, 6, 12, 15, 19], [7, 8, 10], [9, 10, 13], [11, 12, 13],
    [1, 2, 5, 8, 12], [1, 4, 5, 12, 14], [14, 15, 16, 19], [14, 15, 17, 20], [16, 17, 18], [18, 19, 20],
]


def g3() -> tuple[Graph, CycleSystem]:
    g = Graph.from_edges(11, G3_EDGES)
    return g, CycleSystem.from_edge_lists(g, G3_CYCLES)


# ── G4: 13 vertices, 22 edges, 20 cycles for structural numbers ──

G4_ROWS = {
    1: [7, 9, 11], 2: [7, 9, 8, 10], 3: [8, 7, 13, 10], 4: [9, 8, 13, 12, 11],
    5: [11, 9, 12], 6: [13, 10, 12],
}
G4_CYCLES = [
    [1, 2, 4, 5], [1, 3, 8, 9, 13, 16], [1, 3, 9, 10, 14, 16], [2, 3, 12, 16], [2, 3, 17, 18],
    [4, 6, 8, 9], [4, 7, 9, 11], [5, 6, 12, 13], [5, 7, 18, 19, 21, 22], [6, 7, 8, 11],
    [5, 7, 12, 15, 21, 22], [5, 7, 12, 14, 20, 21], [8, 10, 13, 14], [1, 2, 9, 10, 12, 14], [10, 11, 20, 21],
    [12, 16, 17, 18], [12, 15, 18, 19], [14, 15, 20, 22], [15, 16, 17, 19], [6, 7, 13, 15, 21, 22],
]
G4_TREE = [1, 4, 5, 8, 10, 12, 13, 17, 19, 20, 21, 22]


def g4() -> tuple[Graph, CycleSystem]:
    rows = [list(G4_ROWS.get(v, [])) for v in range(1, 14)]
    for v, row in G4_ROWS.items():
        for u in row:
            rows[u - 1].append(v)
    g = Graph.from_adjacency(13, rows)
    return g, CycleSystem.from_edge_lists(g, G4_CYCLES)


# ── G5: cubic, 14 vertices, 21 edges ──

G5_EDGES = [
    (1, 2), (1, 7), (1, 12), (2, 3), (2, 9), (3, 4), (3, 13), (4, 5), (4, 10), (5, 6), (5, 14),
    (6, 7), (6, 11), (7, 8), (8, 9), (8, 14), (9, 10), (10, 11), (11, 12), (12, 13), (13, 14),
]
G5_CYCLES = [
    [1, 2, 5, 14, 15], [1, 3, 4, 7, 20], [2, 3, 12, 13, 19], [4, 5, 6, 9, 17], [6, 7, 8, 11, 21],
    [8, 9, 10, 13, 18], [10, 11, 12, 14, 16], [8, 9, 11, 15, 16, 17], [4, 5, 7, 15, 16, 21],
    [12, 13, 14, 15, 17, 18], [1, 3, 5, 17, 18, 19], [6, 7, 9, 18, 19, 20], [10, 11, 13, 19, 20, 21],
    [2, 3, 14, 16, 20, 21],
]


def g5() -> tuple[Graph, CycleSystem]:
    g = Graph.from_edges(14, G5_EDGES)
    return g, CycleSystem.from_edge_lists(g, G5_CYCLES)


# ── 7.grf: 7 vertices, 16 edges ──

SEVEN_GRF = """7
1 6 11 15 19 24 29 33
2 3 5 6 7
1 3 4 5 6
1 2 4 7
2 3 5 6
1 2 4 6 7
1 2 4 5 7
1 3 5 6
"""

SEVEN_INCIDENCE = [
    (1, 2, 3, 4, 5), (1, 6, 7, 8, 9), (2, 6, 10, 11), (7, 10, 12, 13),
    (3, 8, 12, 14, 15), (4, 9, 13, 14, 16), (5, 11, 15, 16),
]

SEVEN_EZI = """19
1 4 7 10 14 18 21 24 27 30
33 37 41 44 47 50 54 58 61 64
1 2 6
1 3 8
1 4 9
2 3 10 12
2 4 10 13
2 5 11
3 4 14
3 5 15
4 5 16
6 7 10
6 8 11 15
6 9 11 16
7 8 12
7 9 13
8 9 14
10 11 12 15
10 11 13 16
12 13 14
14 15 16
1 2 3
1 2 5
1 2 6
1 3 4 5
1 3 4 6
1 3 7
1 5 6
1 5 7
1 6 7
2 3 4
2 3 5 7
2 3 6 7
2 4 5
2 4 6
2 5 6
3 4 5 7
3 4 6 7
4 5 6
5 6 7
"""


# ── G10: crossing insertion; e14 = {2, 4} is the edge to reinsert ──

G10_EDGES = [
    (1, 2), (1, 3), (1, 5), (2, 3), (2, 6), (2, 7), (3, 4), (3, 5), (3, 7), (4, 5), (4, 6), (5, 6), (6, 7), (2, 4),
]
G10_FACES = [[3, 4, 5], [1, 3, 5], [1, 5, 6, 2], [2, 6, 7], [4, 6, 5], [1, 2, 3], [2, 7, 3]]
G10_RIM = [3, 7, 6, 4]


def g10() -> tuple[Graph, list[Cycle], Cycle]:
    g = Graph.from_edges(7, G10_EDGES)
    kept = [Cycle.from_vertices(g, f) for f in G10_FACES]
    return g, kept, Cycle.from_vertices(g, G10_RIM)


# ── G12: 31-vertex planar drawing with 18 inner faces and rim c19 ──

G12_FACES = [
    [2, 3, 4, 5, 1],
    [10, 6, 11, 3, 2],
    [6, 7, 8, 9, 18, 17, 11],
    [10, 13, 12, 7, 6],
    [31, 25, 26, 8, 7, 12, 14],
    [14, 12, 13, 15],
    [28, 27, 15, 13, 10],
    [3, 11, 17, 16, 4],
    [5, 4, 16, 20, 21],
    [23, 20, 16, 17, 18, 19],
    [24, 19, 18, 9, 30],
    [26, 30, 9, 8],
    [31, 1, 5, 21, 22],
    [31, 22, 23, 19, 24, 25],
    [25, 24, 30, 26],
    [22, 21, 20, 23],
    [31, 14, 15, 27, 29],
    [29, 27, 28],
]
G12_RIM = [31, 29, 28, 10, 2, 1]


def g12() -> tuple[Graph, list[Cycle], Cycle]:
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for face in G12_FACES + [G12_RIM]:
        for i, v in enumerate(face):
            u = face[(i + 1) % len(face)]
            key = (min(u, v), max(u, v))
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    g = Graph.from_edges(31, sorted(pairs))
    kept = [Cycle.from_vertices(g, f) for f in G12_FACES]
    return g, kept, Cycle.from_vertices(g, G12_RIM)


# ── 31-vertex layout instance with its six-vertex boundary ──

G31_ROWS = {
    1: [2, 3, 4, 5, 21, 22, 31],
    2: [1, 3, 4, 5, 6, 10, 11],
    3: [1, 2, 4, 5, 6, 10, 11, 16, 17],
    4: [1, 2, 3, 5, 11, 16, 17, 20, 21],
    5: [1, 2, 3, 4, 16, 20, 21, 22, 31],
    6: [2, 3, 7, 8, 9, 10, 11, 12, 13, 17, 18],
    7: [6, 8, 9, 10, 11, 12, 13, 14, 17, 18, 25, 26, 31],
    8: [6, 7, 9, 11, 12, 14, 17, 18, 25, 26, 30, 31],
    9: [6, 7, 8, 11, 17, 18, 19, 24, 26, 30],
    10: [2, 3, 6, 7, 11, 12, 13, 15, 27, 28],
    11: [2, 3, 4, 6, 7, 8, 9, 10, 16, 17, 18],
    12: [6, 7, 8, 10, 13, 14, 15, 25, 26, 31],
    13: [6, 7, 10, 12, 14, 15, 27, 28],
    14: [7, 8, 12, 13, 15, 25, 26, 27, 29, 31],
    15: [10, 12, 13, 14, 27, 28, 29, 31],
    16: [3, 4, 5, 11, 17, 18, 19, 20, 21, 23],
    17: [3, 4, 6, 7, 8, 9, 11, 16, 18, 19, 20, 23],
    18: [6, 7, 8, 9, 11, 16, 17, 19, 20, 23, 24, 30],
    19: [9, 16, 17, 18, 20, 22, 23, 24, 25, 30, 31],
    20: [4, 5, 16, 17, 18, 19, 21, 22, 23],
    21: [1, 4, 5, 16, 20, 22, 23, 31],
    22: [1, 5, 19, 20, 21, 23, 24, 25, 31],
    23: [16, 17, 18, 19, 20, 21, 22, 24, 25, 31],
    24: [9, 18, 19, 22, 23, 25, 26, 30, 31],
    25: [7, 8, 12, 14, 19, 22, 23, 24, 26, 30, 31],
    26: [7, 8, 9, 12, 14, 24, 25, 30, 31],
    27: [10, 13, 14, 15, 28, 29, 31],
    28: [10, 13, 15, 27, 29],
    29: [14, 15, 27, 28, 31],
    30: [8, 9, 18, 19, 24, 25, 26],
    31: [1, 5, 7, 8, 12, 14, 15, 19, 21, 22, 23, 24, 25, 26, 27, 29],
}


def g31() -> Graph:
    return Graph.from_adjacency(31, [G31_ROWS[v] for v in range(1, 32)])


BOUNDARY_GM1 = """6
31 29 28 10 2 1
0.0 0.67 100.0 100.0 67.0 0.0
100.0 100.0 67.0 0.0 0.0 0.0
"""

BOUNDARY_GM1_SECOND = """14
31 29 28 10 2 1 22 25 14 27
13 6 3 5
0.0 0.67 100.0 100.0 67.0 0.0 08.0 11.0 15.0 83.0
75.0 69.0 38.0 13.0
100.0 100.0 67.0 0.0 0.0 0.0 68.0 75.0 82.0 84.0
25.0 19.0 11.0 34.0
"""
