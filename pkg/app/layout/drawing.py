"""Straight-line drawings and the geometric crossing check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from app.errors import SolverError

Point = tuple[float, float]


@dataclass(slots=True)
class Drawing:
    coords: dict[int, Point] = field(default_factory=dict)
    fixed: frozenset[int] = frozenset()
    stiffness: dict[tuple[int, int], float] = field(default_factory=dict)

    def point(self, v: int) -> Point:
        try:
            return self.coords[v]
        except KeyError:
            raise SolverError(f"v{v} has no coordinates") from None

    def weight(self, u: int, v: int) -> float:
        return self.stiffness.get((min(u, v), max(u, v)), 1.0)

    def array(self, vertices: Iterable[int]) -> np.ndarray:
        return np.array([self.point(v) for v in vertices], dtype=float).reshape(-1, 2)


def _orientation(p: np.ndarray, q: np.ndarray, r: np.ndarray) -> float:
    return float((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))


def _proper_cross(a: np.ndarray, b: np.ndarray, c: np.ndarray, d: np.ndarray, eps: float) -> bool:
    d1, d2 = _orientation(c, d, a), _orientation(c, d, b)
    d3, d4 = _orientation(a, b, c), _orientation(a, b, d)
    if min(abs(d1), abs(d2), abs(d3), abs(d4)) <= eps:
        return False
    return d1 * d2 < 0 and d3 * d4 < 0


def segments_cross(
    drawing: Drawing,
    edges: Iterable[tuple[int, int]],
    *,
    eps: float = 1e-9,
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs of straight segments that cross in their interiors.

    Segments sharing an endpoint never count.
    """
    segs = sorted({(min(u, v), max(u, v)) for u, v in edges})
    pts: Mapping[int, np.ndarray] = {v: np.asarray(drawing.point(v), dtype=float) for s in segs for v in s}
    out = []
    for i, (a, b) in enumerate(segs):
        for c, d in segs[i + 1:]:
            if {a, b} & {c, d}:
                continue
            if _proper_cross(pts[a], pts[b], pts[c], pts[d], eps):
                out.append(((a, b), (c, d)))
    return out
