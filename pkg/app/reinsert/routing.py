"""
Đưa cạnh đã xoá trở lại bằng định tuyến trên đồ thị đối ngẫu.

Mỗi mặt là một nút; hai mặt kề nhau qua một cạnh chung. Đường đi ngắn nhất
giữa mặt chứa u và mặt chứa w cho số giao điểm tối thiểu; mỗi giao điểm là
một đỉnh giả bậc 4 chia đôi cạnh bị cắt.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from app.config import config
from app.embed.rotation import (
    Dart,
    Embedding,
    RotationSystem,
    corner_before,
    face_darts,
    insert_edge_in_face,
    insert_segment,
)
from app.errors import EmbeddingError
from app.planar_logging import get_logger

logger = get_logger(__name__)


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, slots=True)
class Route:
    edge: int
    ends: tuple[int, int]
    faces: tuple[int, ...]
    crossed: tuple[Dart, ...] = ()

    @property
    def crossings(self) -> int:
        return len(self.crossed)


def _dual_steps(emb: Embedding, face: int) -> list[tuple[Dart, int]]:
    """(dart on ``face``, face across it) for every edge not bounded by ``face`` on both sides."""
    steps = []
    for a, b in face_darts(emb.faces[face]):
        other = emb.face_of((b, a))
        if other != face:
            steps.append(((a, b), other))
    return steps


def _endpoints(emb: Embedding, e: int) -> tuple[int, int]:
    u, w = emb.graph.ends(e)
    for v in (u, w):
        if not emb.is_embedded(v):
            raise EmbeddingError(f"endpoint v{v} of e{e} is not embedded")
    if e in emb.real_edges():
        raise EmbeddingError(f"e{e} is already embedded")
    return u, w


def route_edge(emb: Embedding, e: int, *, cap: int | None = None) -> list[Route]:
    """All dual paths of minimal length between the faces of e's endpoints."""
    cap = config.reinsert.route_cap if cap is None else cap
    u, w = _endpoints(emb, e)
    sources = emb.faces_at(u)
    targets = set(emb.faces_at(w))

    dist = {f: 0 for f in sources}
    queue = deque(sources)
    while queue:
        f = queue.popleft()
        for _, nxt in _dual_steps(emb, f):
            if nxt not in dist:
                dist[nxt] = dist[f] + 1
                queue.append(nxt)
    reachable = [dist[f] for f in targets if f in dist]
    if not reachable:
        raise EmbeddingError(f"no face path between v{u} and v{w}")
    depth = min(reachable)

    routes: list[Route] = []

    def extend(faces: list[int], crossed: list[Dart]) -> None:
        if len(routes) >= cap:
            return
        here = faces[-1]
        if len(faces) - 1 == depth:
            if here in targets:
                routes.append(Route(e, (u, w), tuple(faces), tuple(crossed)))
            return
        for dart, nxt in _dual_steps(emb, here):
            if dist.get(nxt) == len(faces):
                extend(faces + [nxt], crossed + [dart])

    for f in sources:
        extend([f], [])
    logger.debug("route_edge e%d: %d minimal routes, %d crossings", e, len(routes), depth)
    return routes


def enumerate_routes(
    emb: Embedding,
    u: int,
    w: int,
    max_crossings: int,
    *,
    edge: int | None = None,
    cap: int | None = None,
) -> list[Route]:
    """Every simple dual path with at most ``max_crossings`` crossings, shortest first."""
    cap = config.reinsert.route_cap if cap is None else cap
    edge = emb.graph.edge_id(u, w) if edge is None else edge
    starts = emb.faces_at(u)
    u_faces, w_faces = set(starts), set(emb.faces_at(w))
    routes: list[Route] = []

    def extend(faces: list[int], crossed: list[Dart]) -> None:
        if len(routes) >= cap:
            return
        here = faces[-1]
        if here in w_faces:
            routes.append(Route(edge, (u, w), tuple(faces), tuple(crossed)))
            return
        if len(crossed) == max_crossings:
            return
        for dart, nxt in _dual_steps(emb, here):
            if nxt in faces or nxt in u_faces:
                continue
            extend(faces + [nxt], crossed + [dart])

    for f in starts:
        extend([f], [])
    routes.sort(key=lambda r: (r.crossings, r.faces, r.crossed))
    return routes


def _subdivide(emb: Embedding, x: int, y: int, crossing_edge: int) -> tuple[Embedding, int]:
    """Put a dummy vertex d on x–y; σ(d) starts as (x, y)."""
    d = emb.next_dummy_id()
    sigma = emb.rotation.sigma
    updates = {
        x: tuple(d if t == y else t for t in sigma[x]),
        y: tuple(d if t == x else t for t in sigma[y]),
        d: (x, y),
    }
    owners = dict(emb.segment_owner)
    crossed = owners.pop(_pair(x, y))
    owners[_pair(x, d)] = crossed
    owners[_pair(d, y)] = crossed
    dummies = dict(emb.dummies)
    dummies[d] = (crossed, crossing_edge)
    rim_dart = emb.rim_dart
    if rim_dart == (x, y):
        rim_dart = (x, d)
    elif rim_dart == (y, x):
        rim_dart = (y, d)
    out = emb.with_rotation(
        emb.rotation.with_sigma(updates),
        rim_dart=rim_dart,
        dummies=dummies,
        segment_owner=owners,
    )
    return out, d


def _check_route(emb: Embedding, route: Route) -> None:
    if len(route.faces) != len(route.crossed) + 1:
        raise EmbeddingError("route needs one more face than crossings")
    u, w = route.ends
    if u not in emb.faces[route.faces[0]] or w not in emb.faces[route.faces[-1]]:
        raise EmbeddingError(f"route of e{route.edge} does not start and end at its endpoints")
    for i, (a, b) in enumerate(route.crossed):
        if emb.face_of((a, b)) != route.faces[i] or emb.face_of((b, a)) != route.faces[i + 1]:
            raise EmbeddingError(f"crossing ({a}, {b}) does not separate faces {route.faces[i]} and {route.faces[i + 1]}")


def apply_route(emb: Embedding, route: Route) -> Embedding:
    """Draw the routed edge, one dummy vertex per crossing."""
    _check_route(emb, route)
    u, w = route.ends
    if not route.crossed:
        return insert_edge_in_face(emb, u, w, route.faces[0], edge_id=route.edge)

    current = u
    current_after: int | None = None
    for x, y in route.crossed:
        emb, d = _subdivide(emb, x, y, route.edge)
        if current_after is None:
            current_after = corner_before(emb.faces[emb.face_of((x, d))], current)
        # σ(d) becomes x, current, y; the next segment goes in after y
        emb = insert_segment(emb, current, current_after, d, x, route.edge)
        current, current_after = d, y
    last = emb.faces[emb.face_of((current_after, current))]
    emb = insert_segment(emb, current, current_after, w, corner_before(last, w), route.edge)
    logger.debug("apply_route e%d: %d crossings, χ=%d", route.edge, route.crossings, emb.euler_characteristic)
    return emb


def minimize_crossings(
    emb: Embedding,
    deleted: Sequence[int],
    budget: int | None = None,
    seed: int | None = None,
    *,
    route_cap: int | None = None,
) -> tuple[Embedding, int]:
    """Insert the deleted edges one by one along minimal routes.

    The first attempt keeps the given order and the first route of each edge;
    the rest shuffle the order and pick a minimal route at random. Once a route
    is chosen the edge's other routes are dropped; routes are recomputed on the
    updated embedding before the next edge. Best total wins, earliest on ties.
    """
    budget = config.reinsert.order_budget if budget is None else budget
    seed = config.planarize.seed if seed is None else seed
    rng = random.Random(seed)
    best: tuple[int, Embedding] | None = None
    for attempt in range(max(budget, 1)):
        order = list(deleted)
        if attempt:
            rng.shuffle(order)
        current, total = emb, 0
        for e in order:
            routes = route_edge(current, e, cap=route_cap)
            route = routes[0] if attempt == 0 else rng.choice(routes)
            current = apply_route(current, route)
            total += route.crossings
            if best is not None and total >= best[0]:
                break
        else:
            if best is None or total < best[0]:
                logger.debug("minimize_crossings: attempt %d, order %s -> %d crossings", attempt, order, total)
                best = (total, current)
        if best is not None and best[0] == 0:
            break
    assert best is not None
    logger.info("minimize_crossings: %d edges reinserted with %d crossings", len(deleted), best[0])
    return best[1], best[0]


# ── bounds ──────────────────────────────────────────────────────────

def crossing_lower_bound(n: int, m: int) -> Fraction | None:
    """m³ / (64 n²) when m > 4n, otherwise the bound does not apply."""
    if n <= 0 or m <= 4 * n:
        return None
    return Fraction(m ** 3, 64 * n * n)


@dataclass(slots=True)
class CrossingBounds:
    lower: Fraction | None
    constant_29: Fraction | None
    constant_33_75: Fraction | None


def crossing_upper_informational(n: int, m: int) -> CrossingBounds:
    """Reported alongside the lower bound, never used to prune.

    The dense constants apply from m = 7n (29) and m = 7.5n (33.75) on; the
    boundary is inclusive, so n=100, m=700 already gets the 29 value.
    """
    dense_29 = Fraction(m ** 3, 29 * n * n) if n > 0 and m >= 7 * n else None
    dense_3375 = Fraction(4 * m ** 3, 135 * n * n) if n > 0 and 2 * m >= 15 * n else None
    return CrossingBounds(lower=crossing_lower_bound(n, m), constant_29=dense_29, constant_33_75=dense_3375)


# ── vertices ────────────────────────────────────────────────────────

def insert_vertex(emb: Embedding, v: int, edges: Iterable[int]) -> tuple[Embedding, list[int]]:
    """Put v in the face seeing most of its neighbours and connect it to them.

    Returns the new embedding and the incident edges that could not be drawn
    without crossings.
    """
    if emb.is_embedded(v):
        raise EmbeddingError(f"v{v} is already embedded")
    g = emb.graph
    incident = sorted(set(edges))
    reach = {g.other_end(e, v): e for e in incident if emb.is_embedded(g.other_end(e, v))}
    best_face, best_seen = -1, set()
    for i, face in enumerate(emb.faces):
        seen = set(face) & set(reach)
        if len(seen) > len(best_seen):
            best_face, best_seen = i, seen
    if best_face < 0:
        raise EmbeddingError(f"no face carries a neighbour of v{v}")

    boundary = emb.faces[best_face]
    order = [u for u in dict.fromkeys(boundary) if u in best_seen]
    emb = insert_edge_in_face(emb, v, order[0], best_face, edge_id=reach[order[0]])
    for u in order[1:]:
        emb = insert_edge_in_face(emb, v, u, edge_id=reach[u])
    leftover = [e for e in incident if g.other_end(e, v) not in best_seen]
    logger.debug("insert_vertex v%d: %d edges drawn, leftover %s", v, len(order), leftover)
    return emb, leftover


def remove_vertex(emb: Embedding, v: int) -> Embedding:
    """Take v and its edges out of the embedding."""
    if v in emb.dummies:
        raise EmbeddingError(f"v{v} is a crossing, not a vertex")
    sigma = emb.rotation.sigma
    if v not in sigma:
        raise EmbeddingError(f"v{v} is not embedded")
    updates = {u: tuple(t for t in sigma[u] if t != v) for u in sigma[v]}
    rest = {u: around for u, around in sigma.items() if u != v}
    rest.update(updates)
    owners = {p: e for p, e in emb.segment_owner.items() if v not in p}
    rim_dart = emb.rim_dart
    if rim_dart is not None and v in rim_dart:
        rim_dart = next((d for d in face_darts(emb.rim) if v not in d), None)
    return emb.with_rotation(RotationSystem(rest), rim_dart=rim_dart, segment_owner=owners)
