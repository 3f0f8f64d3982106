"""
Đồ thị mức và đặt đỉnh lên các đường bao.

Mức 1 là vành ngoài; mức k là các đỉnh cách vành k-1 bước. Dãy đỉnh của mỗi
mức được xây bằng hai bước quét: đi theo từng cặp đỉnh liên tiếp của mức k-1
trên các mặt, rồi nối các cung chỉ bám vào một đỉnh của mức k-1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Literal, Mapping, Sequence

import numpy as np

from app.config import config
from app.embed.rotation import Embedding
from app.errors import EmbeddingError
from app.layout.drawing import Drawing, Point
from app.planar_logging import get_logger

logger = get_logger(__name__)

ContourKind = Literal["circle", "rectangle", "rect"]


@dataclass(slots=True)
class LevelStructure:
    level_of: dict[int, int]
    sequences: list[list[int]]
    duplicates: dict[int, set[int]] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return len(self.sequences)

    @property
    def longest(self) -> int:
        """Level with the most distinct vertices; ties go to the outer one."""
        return max(range(1, self.depth + 1), key=lambda k: (len(set(self.sequence(k))), -k))

    def sequence(self, k: int) -> list[int]:
        """1-based level k."""
        return self.sequences[k - 1]


@dataclass(frozen=True, slots=True)
class TopoSection:
    level: int
    pair: tuple[int, int]
    endpoints: tuple[int, int]
    members: tuple[int, ...]


# ── levels ──────────────────────────────────────────────────────────

def _rim_sequence(emb: Embedding) -> list[int]:
    rim = list(emb.rim)
    if not rim:
        raise EmbeddingError("embedding has no rim face")
    i = rim.index(min(rim))
    rim = rim[i:] + rim[:i]
    if len(rim) > 2 and rim[-1] < rim[1]:
        rim = [rim[0]] + rim[:0:-1]
    return rim


def _bfs_levels(emb: Embedding, sources: Sequence[int]) -> dict[int, int]:
    level = {v: 1 for v in sources}
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for u in emb.rotation.neighbors(v):
            if u not in level:
                level[u] = level[v] + 1
                queue.append(u)
    return level


def _arcs(face: tuple[int, ...], low: set[int]) -> list[tuple[int, tuple[int, ...], int]]:
    """(low a, high run, low b) for each gap between consecutive low vertices of a face."""
    marks = [i for i, v in enumerate(face) if v in low]
    out = []
    size = len(face)
    for t, p in enumerate(marks):
        q = marks[(t + 1) % len(marks)]
        gap = (q - p) % size or size
        interior = tuple(face[(p + s) % size] for s in range(1, gap))
        if interior:
            out.append((face[p], interior, face[q]))
    return out


def _tidy(seq: list[int]) -> list[int]:
    merged: list[int] = []
    for v in seq:
        if not merged or merged[-1] != v:
            merged.append(v)
    if len(merged) > 3 and merged[0] == merged[-1]:
        merged.pop()
    return merged


def _sweep_level(emb: Embedding, k: int, previous: list[int], level_of: Mapping[int, int]) -> list[int]:
    low = {v for v, lv in level_of.items() if lv <= k - 1}
    faces = sorted((i for i in range(emb.face_count) if i != emb.rim_face), key=emb.face_key)
    arcs = [(i, t, arc) for i in faces for t, arc in enumerate(_arcs(emb.faces[i], low))]
    used: set[tuple[int, int]] = set()
    emitted: list[int] = []

    def chain(anchor: int) -> None:
        while True:
            tail = emitted[-1] if emitted else None
            hit = None
            for i, t, (a, run, b) in arcs:
                if (i, t) in used or a != anchor or b != anchor:
                    continue
                if tail is None or tail in (run[0], run[-1]):
                    hit = (i, t, run)
                    break
            if hit is None:
                return
            i, t, run = hit
            used.add((i, t))
            if tail is None:
                emitted.extend([run[0], run[-1]])
            else:
                emitted.append(run[-1] if tail == run[0] else run[0])

    pairs = list(zip(previous, previous[1:] + previous[:1]))
    for a, b in pairs:
        if a != b:
            for i, t, (x, run, y) in arcs:
                if (i, t) in used:
                    continue
                if (x, y) == (a, b):
                    emitted.extend([run[0], run[-1]])
                elif (x, y) == (b, a):
                    emitted.extend([run[-1], run[0]])
                else:
                    continue
                used.add((i, t))
        chain(b)

    seq = _tidy(emitted)
    missing = sorted(v for v, lv in level_of.items() if lv == k and v not in seq)
    if missing:
        logger.debug("level %d: %s not reached by the sweep", k, missing)
        seq.extend(missing)
    return seq


def level_structure(emb: Embedding) -> LevelStructure:
    """Multi-source BFS from the rim, then the per-level cyclic sequences."""
    first = _rim_sequence(emb)
    level_of = _bfs_levels(emb, first)
    depth = max(level_of.values())
    sequences = [first]
    for k in range(2, depth + 1):
        sequences.append(_sweep_level(emb, k, sequences[-1], level_of))
    duplicates = {}
    for k, seq in enumerate(sequences, start=1):
        twice = {v for v in seq if seq.count(v) > 1}
        if twice:
            duplicates[k] = twice
    logger.debug("level_structure: depth %d, duplicates %s", depth, duplicates)
    return LevelStructure(level_of=level_of, sequences=sequences, duplicates=duplicates)


# ── sections ────────────────────────────────────────────────────────

def _walk_between(face: tuple[int, ...], x: int, y: int) -> list[tuple[int, ...]]:
    """Interior runs from x to y along the face, both directions."""
    runs = []
    for seq in (face, face[::-1]):
        if x not in seq or y not in seq:
            continue
        i = seq.index(x)
        size = len(seq)
        run = []
        for s in range(1, size + 1):
            v = seq[(i + s) % size]
            if v == y:
                runs.append(tuple(run))
                break
            run.append(v)
    return runs


def _run(seq: list[int], p: int, q: int) -> tuple[int, ...]:
    if p not in seq or q not in seq:
        return (p,) if p == q else (p, q)
    i, j = seq.index(p), seq.index(q)
    size = len(seq)
    forward = [seq[(i + s) % size] for s in range((j - i) % size + 1)]
    backward = [seq[(i - s) % size] for s in range((i - j) % size + 1)]
    return tuple(forward if len(forward) <= len(backward) or p == q else backward)


def topo_sections(ls: LevelStructure, emb: Embedding) -> dict[int, list[TopoSection]]:
    """For each consecutive pair of a level, the run it spans on the adjacent level.

    Level 1 looks inward at level 2; every other level looks outward at k-1.
    """
    out: dict[int, list[TopoSection]] = {}
    faces = sorted((i for i in range(emb.face_count) if i != emb.rim_face), key=emb.face_key)
    for k in range(1, ls.depth + 1):
        other = 2 if k == 1 else k - 1
        if other > ls.depth:
            continue
        target = ls.sequence(other)

        def fits(v: int) -> bool:
            lv = ls.level_of[v]
            return lv >= 2 if k == 1 else lv <= k - 1

        seq = ls.sequence(k)
        pairs = [(seq[0], seq[0])] if len(seq) == 1 else list(zip(seq, seq[1:] + seq[:1]))
        sections = []
        for x, y in pairs:
            endpoints = None
            for i in faces:
                for run in _walk_between(emb.faces[i], x, y):
                    if run and all(fits(v) for v in run):
                        endpoints = (run[0], run[-1])
                        break
                if endpoints:
                    break
            if endpoints is None:
                near = sorted(u for u in emb.rotation.neighbors(x) if ls.level_of.get(u) == other)
                if not near:
                    continue
                endpoints = (near[0], near[0])
            sections.append(TopoSection(k, (x, y), endpoints, _run(target, *endpoints)))
        out[k] = sections
    return out


# ── contours ────────────────────────────────────────────────────────

def contour_point(kind: ContourKind, angle: float, radius: float) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    if kind in ("rectangle", "rect"):
        scale = radius / max(abs(c), abs(s))
        return (c * scale, s * scale)
    return (radius * c, radius * s)


def _angle(i: int, count: int) -> float:
    # clockwise from the top
    return math.pi / 2 - 2 * math.pi * i / count


def contour_points(kind: ContourKind, count: int, radius: float) -> list[Point]:
    return [contour_point(kind, _angle(i, count), radius) for i in range(count)]


def _circular_mean(angles: Sequence[float]) -> float:
    return math.atan2(float(np.mean(np.sin(angles))), float(np.mean(np.cos(angles))))


def place_on_contour(
    ls: LevelStructure,
    sections: Mapping[int, list[TopoSection]],
    contour: ContourKind | None = None,
    radius: float | None = None,
    emb: Embedding | None = None,
) -> Drawing:
    """Initial placement: the longest level evenly spaced, the others through sections.

    The longest level sits on the contour of size ``radius``; level k uses
    radius·(depth-k+1)/(depth-longest+1), so outer levels grow past it. Levels outside
    the longest one spread each section's run between the angles of its pair;
    levels inside it take the circular mean of their placed outer neighbours.
    """
    contour = contour or config.layout.contour
    radius = config.layout.radius if radius is None else radius
    depth = ls.depth
    longest = ls.longest
    angle: dict[int, float] = {}

    seq = list(dict.fromkeys(ls.sequence(longest)))
    for i, v in enumerate(seq):
        angle[v] = _angle(i, len(seq))

    for k in range(longest - 1, 0, -1):
        for section in sections.get(k + 1, []):
            x, y = section.pair
            if x not in angle or y not in angle:
                continue
            sweep = (angle[x] - angle[y]) % (2 * math.pi) or 2 * math.pi
            count = len(section.members)
            for t, v in enumerate(section.members):
                angle.setdefault(v, angle[x] - sweep * (t + 1) / (count + 1))
        _fill_from_neighbours(ls, k, k + 1, angle, emb)

    for k in range(longest + 1, depth + 1):
        _fill_from_neighbours(ls, k, k - 1, angle, emb)

    coords = {}
    for k in range(1, depth + 1):
        r = radius * (depth - k + 1) / (depth - longest + 1)
        for v in ls.sequence(k):
            coords.setdefault(v, contour_point(contour, angle[v], r))
    return Drawing(coords=coords, fixed=frozenset(ls.sequence(1)))


def _fill_from_neighbours(
    ls: LevelStructure,
    k: int,
    toward: int,
    angle: dict[int, float],
    emb: Embedding | None,
) -> None:
    seq = list(dict.fromkeys(ls.sequence(k)))
    for v in seq:
        if v in angle:
            continue
        placed = []
        if emb is not None:
            placed = [angle[u] for u in emb.rotation.neighbors(v) if ls.level_of.get(u) == toward and u in angle]
        if placed:
            angle[v] = _circular_mean(placed)
    for i, v in enumerate(seq):
        angle.setdefault(v, _angle(i, len(seq)))
