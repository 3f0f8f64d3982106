"""
Rotation systems, face tracing and embeddings.

Quy ước duyệt mặt: đi tới v từ u thì rời v theo phần tử đứng sau u trong σ(v).
Embedding là giá trị bất biến: mọi phép chèn (cạnh, dây cung, đỉnh giả) trả về
một Embedding mới với các mặt được duyệt lại.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from app.cycles.space import Cycle, CycleSystem
from app.errors import CycleError, EmbeddingError
from app.graph.core import Graph
from app.planar_logging import get_logger

logger = get_logger(__name__)

Dart = tuple[int, int]
Face = tuple[int, ...]


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


# ── Rotation system ─────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class RotationSystem:
    sigma: Mapping[int, tuple[int, ...]]

    def vertices(self) -> list[int]:
        return sorted(self.sigma)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.sigma.get(v, ())

    def degree(self, v: int) -> int:
        return len(self.sigma.get(v, ()))

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.sigma.values()) // 2

    def succ(self, v: int, u: int) -> int:
        around = self.sigma[v]
        try:
            i = around.index(u)
        except ValueError:
            raise EmbeddingError(f"v{u} is not a neighbour of v{v} in the rotation") from None
        return around[(i + 1) % len(around)]

    def darts(self) -> list[Dart]:
        return [(v, u) for v in self.vertices() for u in self.sigma[v]]

    def edges(self) -> list[tuple[int, int]]:
        return sorted({_pair(v, u) for v, u in self.darts()})

    def with_sigma(self, updates: Mapping[int, Sequence[int]]) -> "RotationSystem":
        sigma = dict(self.sigma)
        for v, around in updates.items():
            sigma[v] = tuple(around)
        return RotationSystem(sigma)

    def components(self) -> list[set[int]]:
        h = nx.Graph()
        h.add_nodes_from(self.sigma)
        h.add_edges_from(self.edges())
        return [set(c) for c in nx.connected_components(h)]


def trace_faces(rot: RotationSystem) -> list[Face]:
    """Walk every dart once; each face starts at the first unused dart in vertex order."""
    used: set[Dart] = set()
    faces: list[Face] = []
    for start in rot.darts():
        if start in used:
            continue
        face: list[int] = []
        u, v = start
        while (u, v) not in used:
            used.add((u, v))
            face.append(u)
            u, v = v, rot.succ(v, u)
        if (u, v) != start:
            raise EmbeddingError(f"face walk from {start} did not close")
        faces.append(tuple(face))
    return faces


def face_darts(face: Face) -> list[Dart]:
    return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


# ── Embedding ───────────────────────────────────────────────────────

@dataclass(frozen=True, slots=True)
class Embedding:
    graph: Graph
    rotation: RotationSystem
    faces: tuple[Face, ...]
    rim_face: int
    rim_dart: Dart | None = None
    dummies: Mapping[int, tuple[int, int]] = field(default_factory=dict)
    segment_owner: Mapping[tuple[int, int], int] = field(default_factory=dict)
    _dart_face: dict[Dart, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        for i, face in enumerate(self.faces):
            for d in face_darts(face):
                self._dart_face[d] = i

    @classmethod
    def from_rotation(
        cls,
        g: Graph,
        rotation: RotationSystem,
        *,
        rim_dart: Dart | None = None,
        dummies: Mapping[int, tuple[int, int]] | None = None,
        segment_owner: Mapping[tuple[int, int], int] | None = None,
    ) -> "Embedding":
        faces = tuple(trace_faces(rotation))
        if segment_owner is None:
            segment_owner = {(a, b): g.edge_id(a, b) for a, b in rotation.edges()}
        rim_face = -1
        if faces:
            if rim_dart is None:
                rim_dart = (faces[0][0], faces[0][1 % len(faces[0])])
            rim_face = next((i for i, f in enumerate(faces) if rim_dart in face_darts(f)), -1)
            if rim_face < 0:
                raise EmbeddingError(f"rim dart {rim_dart} is not in the rotation")
        return cls(
            graph=g,
            rotation=rotation,
            faces=faces,
            rim_face=rim_face,
            rim_dart=rim_dart,
            dummies=dict(dummies or {}),
            segment_owner=dict(segment_owner),
        )

    @classmethod
    def from_cycles(cls, g: Graph, kept: Sequence[Cycle], rim: Cycle) -> "Embedding":
        rotation = cycles_to_rotation(g, kept, rim)
        return cls.from_rotation(g, rotation, rim_dart=(rim.vertices[0], rim.vertices[1]))

    @classmethod
    def from_result(cls, g: Graph, sys: CycleSystem, result) -> "Embedding":
        """Embedding of a PlanarResult: kept cycles as inner faces, its rim outside."""
        kept = [sys[k] for k in sorted(result.kept_cycles)]
        try:
            rim = Cycle.from_edges(g, result.rim.ids())
        except CycleError as exc:
            raise EmbeddingError(f"rim is not a simple cycle: {exc}") from exc
        return cls.from_cycles(g, kept, rim)

    @classmethod
    def empty(cls, g: Graph, vertices: Iterable[int] = ()) -> "Embedding":
        """Isolated vertices only; the starting point of a thickness layer."""
        return cls.from_rotation(g, RotationSystem({v: () for v in vertices}), segment_owner={})

    # ── queries ──

    @property
    def vertex_count(self) -> int:
        return len(self.rotation.sigma)

    @property
    def edge_count(self) -> int:
        return self.rotation.edge_count

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    @property
    def rim(self) -> Face:
        return self.faces[self.rim_face] if self.rim_face >= 0 else ()

    @property
    def crossings(self) -> int:
        return len(self.dummies)

    def next_dummy_id(self) -> int:
        return max([self.graph.n, *self.dummies]) + 1

    def is_embedded(self, v: int) -> bool:
        return bool(self.rotation.sigma.get(v))

    def face_of(self, dart: Dart) -> int:
        try:
            return self._dart_face[dart]
        except KeyError:
            raise EmbeddingError(f"dart {dart} is not embedded") from None

    def faces_at(self, v: int) -> list[int]:
        return sorted({self._dart_face[(v, u)] for u in self.rotation.neighbors(v)})

    def real_edges(self) -> frozenset[int]:
        """Original edge ids drawn in this embedding (crossed ones included)."""
        return frozenset(self.segment_owner.values())

    def component_of(self, v: int) -> set[int]:
        for comp in self.rotation.components():
            if v in comp:
                return comp
        return {v}

    def face_key(self, i: int) -> int:
        """Smallest original edge id on a face boundary; orders faces for sweeps."""
        return min(self.segment_owner[_pair(a, b)] for a, b in face_darts(self.faces[i]))

    def with_rotation(
        self,
        rotation: RotationSystem,
        *,
        rim_dart: Dart | None = None,
        dummies: Mapping[int, tuple[int, int]] | None = None,
        segment_owner: Mapping[tuple[int, int], int] | None = None,
    ) -> "Embedding":
        rim_dart = rim_dart if rim_dart is not None else self.rim_dart
        if rim_dart is not None and rim_dart[1] not in rotation.neighbors(rim_dart[0]):
            rim_dart = None
        return Embedding.from_rotation(
            self.graph,
            rotation,
            rim_dart=rim_dart,
            dummies=self.dummies if dummies is None else dummies,
            segment_owner=self.segment_owner if segment_owner is None else segment_owner,
        )


# ── cycles → rotation ───────────────────────────────────────────────

def _orient(seq: Sequence[int], dart: Dart) -> tuple[int, ...]:
    """Return ``seq`` or its reversal, whichever contains ``dart``."""
    darts = face_darts(tuple(seq))
    if dart in darts:
        return tuple(seq)
    if (dart[1], dart[0]) in darts:
        return tuple(reversed(seq))
    raise EmbeddingError(f"edge {dart} is not on cycle {tuple(seq)}")


def cycles_to_rotation(g: Graph, kept: Sequence[Cycle], rim: Cycle) -> RotationSystem:
    """Stitch face corners into a rotation whose face trace returns ``kept`` plus ``rim``.

    The rim keeps its normalised vertex order; every other face is oriented so
    that each shared edge is walked once in each direction.
    """
    faces: list[tuple[int, ...]] = [tuple(rim.vertices)] + [tuple(c.vertices) for c in kept]
    sides: dict[tuple[int, int], list[int]] = {}
    for i, face in enumerate(faces):
        for a, b in face_darts(face):
            sides.setdefault(_pair(a, b), []).append(i)
    for edge, owners in sides.items():
        if len(owners) != 2:
            raise EmbeddingError(f"edge {edge} lies on {len(owners)} faces, expected 2")

    oriented: dict[int, tuple[int, ...]] = {0: faces[0]}
    queue = [0]
    while queue:
        i = queue.pop()
        for a, b in face_darts(oriented[i]):
            first, second = sides[_pair(a, b)]
            j = second if first == i else first
            if j == i:
                raise EmbeddingError(f"edge ({a}, {b}) is walked twice by the same face")
            if j in oriented:
                if (b, a) not in face_darts(oriented[j]):
                    raise EmbeddingError("cycle orientations are inconsistent (not a disk system)")
                continue
            oriented[j] = _orient(faces[j], (b, a))
            queue.append(j)
    if len(oriented) != len(faces):
        raise EmbeddingError("cycle system is not connected through shared edges")

    succ: dict[int, dict[int, int]] = {}
    for face in oriented.values():
        k = len(face)
        for t in range(k):
            x, v, y = face[t - 1], face[t], face[(t + 1) % k]
            if x in succ.setdefault(v, {}):
                raise EmbeddingError(f"two corners at v{v} leave from v{x}")
            succ[v][x] = y

    sigma: dict[int, tuple[int, ...]] = {}
    for v in sorted(succ):
        nxt = succ[v]
        start = min(nxt)
        around = [start]
        while (w := nxt[around[-1]]) != start:
            if w in around or len(around) > len(nxt):
                raise EmbeddingError(f"corners at v{v} do not close into one cycle")
            around.append(w)
        if len(around) != len(nxt):
            raise EmbeddingError(f"corners at v{v} form more than one cycle")
        sigma[v] = tuple(around)
    logger.debug("cycles_to_rotation: %d vertices from %d faces", len(sigma), len(faces))
    return RotationSystem(sigma)


# ── verification ────────────────────────────────────────────────────

@dataclass(slots=True)
class EmbeddingReport:
    vertex_count: int
    edge_count: int
    face_count: int
    euler_characteristic: int
    components: int
    genus: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and self.genus == 0


def verify_embedding(emb: Embedding) -> EmbeddingReport:
    problems: list[str] = []
    sigma = emb.rotation.sigma
    for v, around in sigma.items():
        if len(set(around)) != len(around):
            problems.append(f"duplicate neighbour at v{v}")
        for u in around:
            if v not in sigma.get(u, ()):
                problems.append(f"asymmetric rotation: v{u} in σ(v{v}) only")
    for d, (a, b) in emb.dummies.items():
        if len(sigma.get(d, ())) != 4:
            problems.append(f"dummy v{d} (edges e{a}, e{b}) has degree {len(sigma.get(d, ()))}")
    if not problems:
        traced = trace_faces(emb.rotation)
        if {frozenset(face_darts(f)) for f in traced} != {frozenset(face_darts(f)) for f in emb.faces}:
            problems.append("faces differ from the face trace of the rotation")

    darts_seen: dict[Dart, int] = {}
    for face in emb.faces:
        for d in face_darts(face):
            darts_seen[d] = darts_seen.get(d, 0) + 1
    if any(c != 1 for c in darts_seen.values()):
        problems.append("some dart lies on more than one face")

    comps = emb.rotation.components()
    faces_per_comp = [0] * len(comps)
    index = {v: i for i, comp in enumerate(comps) for v in comp}
    for face in emb.faces:
        faces_per_comp[index[face[0]]] += 1
    genus_twice = 0
    for i, comp in enumerate(comps):
        edges = sum(len(sigma[v]) for v in comp) // 2
        if edges == 0:
            continue
        genus_twice += 2 - (len(comp) - edges + faces_per_comp[i])
    report = EmbeddingReport(
        vertex_count=emb.vertex_count,
        edge_count=emb.edge_count,
        face_count=emb.face_count,
        euler_characteristic=emb.euler_characteristic,
        components=len(comps),
        genus=genus_twice // 2,
        problems=problems,
    )
    if not report.ok:
        logger.debug("verify_embedding: genus %d, problems %s", report.genus, problems)
    return report


# ── face-splitting primitive ────────────────────────────────────────

def corner_before(face: Face, v: int) -> int:
    """Predecessor of the first occurrence of v on a face walk."""
    i = face.index(v)
    return face[i - 1]


def _splice(around: tuple[int, ...], after: int | None, w: int) -> tuple[int, ...]:
    if after is None:
        return around + (w,)
    i = around.index(after)
    return around[: i + 1] + (w,) + around[i + 1:]


def insert_segment(
    emb: Embedding,
    u: int,
    u_after: int | None,
    w: int,
    w_after: int | None,
    owner: int,
) -> Embedding:
    """Add u–w so that it follows ``u_after`` in σ(u) and ``w_after`` in σ(w)."""
    sigma = emb.rotation.sigma
    updates = {
        u: _splice(sigma.get(u, ()), u_after, w),
        w: _splice(sigma.get(w, ()), w_after, u),
    }
    owners = dict(emb.segment_owner)
    owners[_pair(u, w)] = owner
    rim_dart = emb.rim_dart if emb.rim_dart is not None else (u, w)
    return emb.with_rotation(emb.rotation.with_sigma(updates), rim_dart=rim_dart, segment_owner=owners)


def common_faces(emb: Embedding, u: int, w: int) -> list[int]:
    """Faces whose boundary passes through both u and w; rim face first."""
    shared = set(emb.faces_at(u)) & set(emb.faces_at(w))
    return sorted(shared, key=lambda i: (i != emb.rim_face, i))


def insert_edge_in_face(
    emb: Embedding,
    u: int,
    w: int,
    face: int | None = None,
    *,
    edge_id: int | None = None,
) -> Embedding:
    """Draw u–w inside a face, splitting it in two.

    When u and w lie in different components (or one is not drawn yet) the
    edge joins them through any corner and no face is split.
    """
    if u == w:
        raise EmbeddingError("cannot insert a loop")
    if w in emb.rotation.neighbors(u):
        raise EmbeddingError(f"v{u}–v{w} is already embedded")
    owner = emb.graph.edge_id(u, w) if edge_id is None else edge_id
    sigma = emb.rotation.sigma
    if not sigma.get(u) or not sigma.get(w) or w not in emb.component_of(u):
        boundary = emb.faces[face] if face is not None else ()

        def corner(v: int) -> int | None:
            if not sigma.get(v):
                return None
            return corner_before(boundary, v) if v in boundary else sigma[v][0]

        return insert_segment(emb, u, corner(u), w, corner(w), owner)
    if face is None:
        shared = common_faces(emb, u, w)
        if not shared:
            raise EmbeddingError(f"v{u} and v{w} share no face")
        face = shared[0]
    boundary = emb.faces[face]
    if u not in boundary or w not in boundary:
        raise EmbeddingError(f"face {face} does not contain both v{u} and v{w}")
    return insert_segment(emb, u, corner_before(boundary, u), w, corner_before(boundary, w), owner)
