"""
JSON document: ghi kết quả từng bước và đọc lại cho bước sau.

Các bước CLI nối nhau qua tài liệu này: planarize ghi kept_cycles/deleted_edges,
embed thêm rotation/faces, reinsert thêm dummies hoặc layers, layout thêm coords.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from pydantic import ValidationError

from app.config import config
from app.cycles.space import CycleSystem, EdgeSet
from app.embed.rotation import Embedding, RotationSystem
from app.errors import CycleError, EmbeddingError, FormatError, GraphError
from app.graph.core import Graph
from app.layout.drawing import Drawing
from app.models import (
    CycleDoc,
    DescentStepDoc,
    DrawingDoc,
    EmbeddingDoc,
    GraphDoc,
    LayerDoc,
    PlanarDoc,
    ResultDocument,
)
from app.planarize.descent import DescentStep, PlanarResult
from app.reinsert.thickness import Layer


def _round(x: float) -> float:
    return round(float(x), config.output.float_digits)


def _sigma_doc(rotation: RotationSystem) -> dict[int, list[int]]:
    return {v: list(rotation.neighbors(v)) for v in rotation.vertices()}


# ── build ──────────────────────────────────────────────────────────

def graph_doc(g: Graph) -> GraphDoc:
    return GraphDoc(
        n=g.n,
        m=g.m,
        adjacency=[list(row) for row in g.adjacency],
        edges=[list(pair) for pair in g.edge_ends],
    )


def cycle_docs(sys: CycleSystem) -> list[CycleDoc]:
    return [
        CycleDoc(index=k, edges=list(c.edge_ids()), vertices=list(c.vertices))
        for k, c in enumerate(sys.cycles, start=1)
    ]


def planar_doc(result: PlanarResult) -> PlanarDoc:
    return PlanarDoc(
        rim=list(result.rim.ids()),
        edges_kept=result.edges_kept,
        restart=result.restart,
        seed=result.seed,
        permutation=[k + 1 for k in result.permutation] if result.permutation is not None else None,
        ok=result.ok,
        trace=[
            DescentStepDoc(
                removed_cycle=step.removed_cycle + 1,
                functional_after=step.functional_after,
                edges_deleted=sorted(step.edges_deleted),
                vetoed=[k + 1 for k in step.vetoed],
            )
            for step in result.trace
        ],
    )


def build_document(
    g: Graph,
    *,
    sys: CycleSystem | None = None,
    result: PlanarResult | None = None,
    emb: Embedding | None = None,
    layers: Sequence[Layer] | None = None,
    drawing: Drawing | None = None,
) -> ResultDocument:
    doc = ResultDocument(graph=graph_doc(g))
    if sys is not None:
        doc.cycles = cycle_docs(sys)
    if result is not None:
        doc.kept_cycles = sorted(k + 1 for k in result.kept_cycles)
        doc.deleted_edges = sorted(result.deleted_edges)
        doc.planar = planar_doc(result)
    if emb is not None:
        doc.rotation = _sigma_doc(emb.rotation)
        doc.faces = [list(face) for face in emb.faces]
        doc.dummies = {d: list(pair) for d, pair in sorted(emb.dummies.items())}
        doc.embedding = EmbeddingDoc(
            rim_face=emb.rim_face,
            rim_dart=list(emb.rim_dart) if emb.rim_dart is not None else None,
            segments=[[a, b, owner] for (a, b), owner in sorted(emb.segment_owner.items())],
            crossings=emb.crossings,
            euler_characteristic=emb.euler_characteristic,
        )
    if layers:
        doc.layers = [
            LayerDoc(index=layer.index, edges=sorted(layer.edges), rotation=_sigma_doc(layer.embedding.rotation))
            for layer in layers
        ]
    if drawing is not None:
        doc.coords = {v: [_round(x), _round(y)] for v, (x, y) in sorted(drawing.coords.items())}
        doc.drawing = DrawingDoc(
            fixed=sorted(drawing.fixed),
            stiffness=[[u, v, _round(w)] for (u, v), w in sorted(drawing.stiffness.items())],
        )
    return doc


def emit_json(g: Graph, **parts) -> str:
    """Serialise whatever stages are available; absent stages stay empty."""
    return build_document(g, **parts).model_dump_json(indent=2) + "\n"


# ── load ───────────────────────────────────────────────────────────

def load_document(text: str, path: str | None = None) -> ResultDocument:
    try:
        return ResultDocument.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(p) for p in first.get("loc", ()))
        raise FormatError(f"invalid document at {where or 'root'}: {first.get('msg')}", path=path) from exc


def graph_from_doc(doc: ResultDocument) -> Graph:
    gd = doc.graph
    try:
        g = Graph.from_adjacency(gd.n, gd.adjacency)
        if gd.edges and [list(p) for p in g.edge_ends] != gd.edges:
            g = Graph.from_edges(gd.n, [tuple(p) for p in gd.edges])
    except GraphError as exc:
        raise FormatError(f"document graph: {exc}") from exc
    if g.m != gd.m:
        raise FormatError(f"document graph has {g.m} edges, header says {gd.m}")
    return g


def cycles_from_doc(doc: ResultDocument, g: Graph) -> CycleSystem:
    ordered = sorted(doc.cycles, key=lambda c: c.index)
    if [c.index for c in ordered] != list(range(1, len(ordered) + 1)):
        raise FormatError("document cycles must be numbered 1..k")
    try:
        return CycleSystem.from_edge_lists(g, [c.edges for c in ordered])
    except (CycleError, GraphError) as exc:
        raise FormatError(f"document cycles: {exc}") from exc


def result_from_doc(doc: ResultDocument, g: Graph) -> PlanarResult:
    if doc.planar is None:
        raise FormatError("document has no planarize stage")
    p = doc.planar
    return PlanarResult(
        kept_cycles=frozenset(k - 1 for k in doc.kept_cycles),
        deleted_edges=frozenset(doc.deleted_edges),
        rim=EdgeSet.from_ids(g.m, p.rim),
        edge_count=g.m,
        trace=[
            DescentStep(
                removed_cycle=s.removed_cycle - 1,
                functional_after=s.functional_after,
                edges_deleted=frozenset(s.edges_deleted),
                vetoed=[k - 1 for k in s.vetoed],
            )
            for s in p.trace
        ],
        seed=p.seed,
        permutation=[k - 1 for k in p.permutation] if p.permutation is not None else None,
        restart=p.restart,
        ok=p.ok,
    )


def _rotation(sigma: dict[int, list[int]]) -> RotationSystem:
    return RotationSystem({v: tuple(around) for v, around in sorted(sigma.items())})


def embedding_from_doc(doc: ResultDocument, g: Graph) -> Embedding:
    if not doc.rotation:
        raise FormatError("document has no embed stage")
    e = doc.embedding
    owner = None
    rim_dart = None
    if e is not None:
        owner = {(min(a, b), max(a, b)): o for a, b, o in e.segments} if e.segments else None
        rim_dart = tuple(e.rim_dart) if e.rim_dart else None
    try:
        return Embedding.from_rotation(
            g,
            _rotation(doc.rotation),
            rim_dart=rim_dart,
            dummies={d: (pair[0], pair[1]) for d, pair in doc.dummies.items()},
            segment_owner=owner,
        )
    except (EmbeddingError, GraphError) as exc:
        raise FormatError(f"document rotation: {exc}") from exc


def layers_from_doc(doc: ResultDocument, g: Graph) -> list[Layer]:
    layers = []
    for ld in doc.layers:
        try:
            emb = Embedding.from_rotation(g, _rotation(ld.rotation))
        except (EmbeddingError, GraphError) as exc:
            raise FormatError(f"document layer {ld.index}: {exc}") from exc
        layers.append(Layer(index=ld.index, edges=frozenset(ld.edges), embedding=emb))
    return layers


def drawing_from_doc(doc: ResultDocument) -> Drawing:
    fixed: Iterable[int] = doc.drawing.fixed if doc.drawing else ()
    stiffness = {}
    if doc.drawing:
        stiffness = {(int(u), int(v)): w for u, v, w in doc.drawing.stiffness}
    return Drawing(
        coords={v: (xy[0], xy[1]) for v, xy in doc.coords.items()},
        fixed=frozenset(fixed),
        stiffness=stiffness,
    )
