"""
Pydantic models cho tài liệu JSON mà CLI ghi ra và đọc lại giữa các bước.

Thứ tự khoá cố định theo thứ tự field. Chỉ số chu trình trong tài liệu là
1-based (c1, c2, ...); mã đỉnh và mã cạnh giữ nguyên như trong Graph.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


# ── Input ──────────────────────────────────────────────────────────


class GraphDoc(BaseModel):
    n: int
    m: int
    adjacency: list[list[int]]
    edges: list[list[int]] = Field(default_factory=list)  # edge id k at position k-1


class CycleDoc(BaseModel):
    index: int  # 1-based
    edges: list[int]
    vertices: list[int]


# ── Planarize ──────────────────────────────────────────────────────


class DescentStepDoc(BaseModel):
    removed_cycle: int  # 1-based
    functional_after: int
    edges_deleted: list[int] = Field(default_factory=list)
    vetoed: list[int] = Field(default_factory=list)


class PlanarDoc(BaseModel):
    rim: list[int]
    edges_kept: int
    restart: int = 0
    seed: Optional[int] = None
    permutation: Optional[list[int]] = None
    ok: bool = True
    trace: list[DescentStepDoc] = Field(default_factory=list)


# ── Embedding / reinsertion ────────────────────────────────────────


class EmbeddingDoc(BaseModel):
    rim_face: int
    rim_dart: Optional[list[int]] = None
    segments: list[list[int]] = Field(default_factory=list)  # [a, b, original edge]
    crossings: int = 0
    euler_characteristic: int = 2


class LayerDoc(BaseModel):
    index: int
    edges: list[int]
    rotation: dict[int, list[int]] = Field(default_factory=dict)


# ── Layout ─────────────────────────────────────────────────────────


class DrawingDoc(BaseModel):
    fixed: list[int] = Field(default_factory=list)
    stiffness: list[list[float]] = Field(default_factory=list)  # [u, v, weight]


class ResultDocument(BaseModel):
    graph: GraphDoc
    kept_cycles: list[int] = Field(default_factory=list)
    deleted_edges: list[int] = Field(default_factory=list)
    rotation: dict[int, list[int]] = Field(default_factory=dict)
    faces: list[list[int]] = Field(default_factory=list)
    dummies: dict[int, list[int]] = Field(default_factory=dict)  # d -> [crossed edge, routed edge]
    layers: list[LayerDoc] = Field(default_factory=list)
    coords: dict[int, list[float]] = Field(default_factory=dict)
    cycles: list[CycleDoc] = Field(default_factory=list)
    planar: Optional[PlanarDoc] = None
    embedding: Optional[EmbeddingDoc] = None
    drawing: Optional[DrawingDoc] = None
