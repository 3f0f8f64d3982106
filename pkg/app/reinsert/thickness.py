"""
Chia cạnh thành các lớp phẳng (độ dày).

Lớp 1 là phần phẳng đã nhúng; các cạnh còn lại được thử lần lượt theo thứ tự
ngẫu nhiên có seed. Mỗi lớp sau bắt đầu từ mọi đỉnh của đồ thị (cô lập). Một
cạnh vào lớp khi hai đầu mút nằm trên cùng một mặt (tuyến 0 giao điểm) hoặc
thuộc hai thành phần khác nhau của lớp.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from app.config import config
from app.embed.rotation import Embedding, common_faces, insert_edge_in_face
from app.errors import GraphError
from app.graph.core import Graph
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(slots=True)
class Layer:
    index: int
    edges: frozenset[int]
    embedding: Embedding


def _try_add(emb: Embedding, e: int) -> Embedding | None:
    u, w = emb.graph.ends(e)
    if not emb.is_embedded(u) or not emb.is_embedded(w) or w not in emb.component_of(u):
        return insert_edge_in_face(emb, u, w, edge_id=e)
    shared = common_faces(emb, u, w)
    if not shared:
        return None
    return insert_edge_in_face(emb, u, w, shared[0], edge_id=e)


def _fill(emb: Embedding, edges: Iterable[int]) -> tuple[Embedding, list[int]]:
    failed: list[int] = []
    for e in edges:
        grown = _try_add(emb, e)
        if grown is None:
            failed.append(e)
        else:
            emb = grown
    return emb, failed


def thickness_decompose(
    g: Graph,
    base: Embedding,
    attempts: int | None = None,
    seed: int | None = None,
) -> list[Layer]:
    """Fewest layers over seeded random insertion orders; earliest attempt on ties."""
    attempts = config.reinsert.thickness_attempts if attempts is None else attempts
    seed = config.planarize.seed if seed is None else seed
    rng = random.Random(seed)
    remaining = sorted(set(g.edges()) - base.real_edges())
    best: list[Layer] | None = None
    for attempt in range(max(attempts, 1)):
        order = list(remaining)
        if attempt:
            rng.shuffle(order)
        first, pending = _fill(base, order)
        layers = [Layer(1, first.real_edges(), first)]
        while pending:
            emb, pending_next = _fill(Embedding.empty(g, g.vertices()), pending)
            layers.append(Layer(len(layers) + 1, emb.real_edges(), emb))
            pending = pending_next
        if best is None or len(layers) < len(best):
            logger.debug("thickness attempt %d: %d layers", attempt, len(layers))
            best = layers
        if best is not None and len(best) == 1:
            break
    assert best is not None
    logger.info("thickness_decompose: %d layers for %d edges", len(best), g.m)
    return best


def thickness_reference(n: int) -> int:
    """Known thickness of the complete graph on n vertices."""
    if n < 1:
        raise GraphError("n must be positive")
    if n in (9, 10):
        return 3
    return (n + 7) // 6


def bipartite_thickness_reference(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise GraphError("part sizes must be positive")
    if a + b <= 2:
        return 1
    return -(-a * b // (2 * (a + b - 2)))
