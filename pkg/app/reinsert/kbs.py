"""
Rim ring (coordinate-basis system) and crossing-free chord insertion.

Vành ngoài được xem như một vòng các cạnh có hướng. Mỗi dây cung có hai đầu
trên vành chiếu lên một cung của vòng; hai dây cung cắt nhau khi và chỉ khi
các đầu mút của chúng xen kẽ nhau trên vòng.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from app.embed.rotation import Dart, Embedding, common_faces, face_darts, insert_edge_in_face, verify_embedding
from app.errors import EmbeddingError
from app.graph.core import Graph
from app.planar_logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class KbsRing:
    graph: Graph
    darts: tuple[Dart, ...]
    edge_ids: tuple[int, ...]
    position: dict[int, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.darts)

    def ends(self, chord: int | tuple[int, int]) -> tuple[int, int]:
        u, w = self.graph.ends(chord) if isinstance(chord, int) else chord
        for v in (u, w):
            if v not in self.position:
                raise EmbeddingError(f"v{v} is not on the rim")
        return u, w


def kbs_ring(emb: Embedding) -> KbsRing:
    """The rim as a directed ring, starting at its lowest edge id."""
    rim = emb.rim
    if not rim:
        raise EmbeddingError("embedding has no rim face")
    if len(set(rim)) != len(rim):
        raise EmbeddingError("rim passes a vertex twice")
    darts = face_darts(rim)
    ids = [emb.segment_owner[(min(a, b), max(a, b))] for a, b in darts]
    start = ids.index(min(ids))
    darts = darts[start:] + darts[:start]
    ids = ids[start:] + ids[:start]
    return KbsRing(
        graph=emb.graph,
        darts=tuple(darts),
        edge_ids=tuple(ids),
        position={a: i for i, (a, _) in enumerate(darts)},
    )


def project(ring: KbsRing, chord: int | tuple[int, int]) -> tuple[int, ...]:
    """Ring arc from the chord's lower-id end to its higher-id end, along the ring."""
    u, w = sorted(ring.ends(chord))
    i, j = ring.position[u], ring.position[w]
    k = len(ring)
    return tuple(ring.edge_ids[(i + t) % k] for t in range((j - i) % k))


def chords_cross(ring: KbsRing, a: int | tuple[int, int], b: int | tuple[int, int]) -> bool:
    a_ends, b_ends = ring.ends(a), ring.ends(b)
    if set(a_ends) & set(b_ends):
        return False
    lo, hi = sorted(ring.position[v] for v in a_ends)
    inside = sum(lo < ring.position[v] < hi for v in b_ends)
    return inside == 1


def conflict_reduce(ring: KbsRing, chords: Sequence[int]) -> tuple[list[int], list[int]]:
    """Drop the most-crossing chord (lowest id on ties) until none cross."""
    live = sorted(set(chords))
    conflicts = {c: {d for d in live if d != c and chords_cross(ring, c, d)} for c in live}
    removed: list[int] = []
    while True:
        worst = max(live, key=lambda c: (len(conflicts[c]), -c), default=None)
        if worst is None or not conflicts[worst]:
            break
        live.remove(worst)
        removed.append(worst)
        for c in conflicts.pop(worst):
            conflicts[c].discard(worst)
        logger.debug("conflict_reduce: drop e%d", worst)
    return live, removed


def insert_chords(emb: Embedding, chords: Iterable[int]) -> Embedding:
    """Draw mutually non-crossing rim chords; each one splits the face holding both ends."""
    g = emb.graph
    for e in chords:
        u, w = g.ends(e)
        shared = common_faces(emb, u, w)
        if not shared:
            raise EmbeddingError(f"e{e}: v{u} and v{w} share no face")
        emb = insert_edge_in_face(emb, u, w, shared[0], edge_id=e)
    report = verify_embedding(emb)
    if not report.ok:
        raise EmbeddingError(f"chord insertion broke the embedding: {report.problems or f'genus {report.genus}'}")
    return emb
