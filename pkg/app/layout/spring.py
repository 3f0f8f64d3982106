"""
Fixed-boundary spring equilibrium.

Với mỗi đỉnh tự do v: (Σ g_uv)·x_v − Σ_{u tự do} g_uv·x_u = Σ_{u cố định} g_uv·X_u,
tương tự cho y. Ma trận đối xứng xác định dương khi mọi đỉnh tự do nối được
tới tập đỉnh cố định; giải bằng phân rã LU thưa.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix, csc_matrix
from scipy.sparse.linalg import splu

from app.config import config
from app.embed.rotation import Embedding
from app.errors import SolverError
from app.graph.core import Graph
from app.layout.drawing import Drawing, Point
from app.layout.levels import LevelStructure
from app.planar_logging import get_logger

logger = get_logger(__name__)

AdjacencySource = Union[Graph, Embedding, Mapping[int, Iterable[int]]]


def adjacency_of(source: AdjacencySource) -> dict[int, tuple[int, ...]]:
    if isinstance(source, Graph):
        return {v: source.neighbors(v) for v in source.vertices()}
    if isinstance(source, Embedding):
        return {v: tuple(around) for v, around in source.rotation.sigma.items() if around}
    return {v: tuple(around) for v, around in source.items()}


@dataclass(slots=True)
class SpringSystem:
    free: list[int]
    matrix: csc_matrix
    rhs: np.ndarray
    fixed: dict[int, Point]
    stiffness: dict[tuple[int, int], float]

    @property
    def diagonal(self) -> dict[int, float]:
        return {v: float(self.matrix[i, i]) for i, v in enumerate(self.free)}


def _weight(stiffness: Mapping[tuple[int, int], float], u: int, v: int) -> float:
    w = stiffness.get((min(u, v), max(u, v)), 1.0)
    if w <= 0:
        raise SolverError(f"stiffness of v{u}–v{v} must be positive")
    return w


def assemble_spring_system(
    source: AdjacencySource,
    fixed: Mapping[int, Point],
    stiffness: Mapping[tuple[int, int], float] | None = None,
) -> SpringSystem:
    adjacency = adjacency_of(source)
    stiffness = dict(stiffness or {})
    if not fixed:
        raise SolverError("at least one vertex must be fixed")

    h = nx.Graph()
    h.add_nodes_from(adjacency)
    h.add_edges_from((v, u) for v, around in adjacency.items() for u in around)
    for comp in nx.connected_components(h):
        if not comp & fixed.keys():
            raise SolverError(f"vertices {sorted(comp)[:5]} have no path to a fixed vertex")

    free = sorted(v for v in adjacency if v not in fixed)
    index = {v: i for i, v in enumerate(free)}
    rows, cols, vals = [], [], []
    rhs = np.zeros((len(free), 2))
    for v in free:
        i = index[v]
        total = 0.0
        for u in adjacency[v]:
            w = _weight(stiffness, u, v)
            total += w
            if u in index:
                rows.append(i)
                cols.append(index[u])
                vals.append(-w)
            else:
                rhs[i] += w * np.asarray(fixed[u], dtype=float)
        rows.append(i)
        cols.append(i)
        vals.append(total)
    matrix = coo_matrix((vals, (rows, cols)), shape=(len(free), len(free))).tocsc()
    return SpringSystem(free=free, matrix=matrix, rhs=rhs, fixed=dict(fixed), stiffness=stiffness)


def solve_spring(system: SpringSystem, *, tol: float | None = None) -> Drawing:
    tol = config.layout.residual_tol if tol is None else tol
    coords = {v: (float(x), float(y)) for v, (x, y) in system.fixed.items()}
    if system.free:
        try:
            lu = splu(system.matrix)
        except RuntimeError as exc:
            raise SolverError(f"spring matrix is singular: {exc}") from exc
        solution = lu.solve(system.rhs)
        residual = np.abs(system.matrix @ solution - system.rhs).max(axis=0)
        scale = np.abs(system.rhs).max(axis=0)
        scale[scale == 0] = 1.0
        relative = float((residual / scale).max())
        if not np.all(np.isfinite(solution)) or relative > tol:
            raise SolverError(f"spring solve residual {relative:.3e} exceeds {tol:.1e}")
        logger.debug("solve_spring: %d free vertices, residual %.2e", len(system.free), relative)
        for v, (x, y) in zip(system.free, solution):
            coords[v] = (float(x), float(y))
    return Drawing(coords=coords, fixed=frozenset(system.fixed), stiffness=dict(system.stiffness))


def _shorten(
    drawing: Drawing,
    adjacency: Mapping[int, tuple[int, ...]],
    level_of: Mapping[int, int],
    k: int,
    factor: float,
) -> dict[int, Point]:
    """Pull level-k vertices toward the mean of their outer neighbours by ``factor``."""
    moved = {}
    for v, lv in level_of.items():
        if lv != k or v not in drawing.coords:
            continue
        outer = [drawing.coords[u] for u in adjacency.get(v, ()) if level_of.get(u, k) < k]
        if not outer:
            moved[v] = drawing.coords[v]
            continue
        anchor = np.mean(np.asarray(outer, dtype=float), axis=0)
        pos = anchor + (np.asarray(drawing.coords[v], dtype=float) - anchor) / factor
        moved[v] = (float(pos[0]), float(pos[1]))
    return moved


def iterative_refine(
    source: AdjacencySource,
    ls: LevelStructure,
    boundary: Mapping[int, Point],
    rounds: int,
    *,
    shrink: float | None = None,
    stiffness: Mapping[tuple[int, int], float] | None = None,
) -> list[Drawing]:
    """Solve, shorten the next level's edges, fix it, solve again.

    Round r keeps levels 1..r fixed and solves for the rest; between rounds
    the level r+1 positions are pulled toward their outer neighbours and
    join the fixed boundary. Returns the drawing of every round.
    """
    if rounds < 1:
        raise SolverError("rounds must be at least 1")
    shrink = config.layout.shrink_factor if shrink is None else shrink
    adjacency = adjacency_of(source)
    fixed = dict(boundary)
    drawings: list[Drawing] = []
    for r in range(1, rounds + 1):
        drawing = solve_spring(assemble_spring_system(adjacency, fixed, stiffness))
        drawings.append(drawing)
        if r + 1 > ls.depth or len(fixed) == len(adjacency):
            break
        fixed.update(_shorten(drawing, adjacency, ls.level_of, r + 1, shrink))
        logger.debug("iterative_refine: round %d fixes %d vertices", r + 1, len(fixed))
    return drawings
