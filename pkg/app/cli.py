"""
Command-line entry: mỗi subcommand là một bước của pipeline.

Đầu vào là .grf/.gr1 (chạy các bước trước đó) hoặc tài liệu JSON do bước
trước ghi ra. Mã thoát: 0 thành công, 1 dữ liệu không hợp lệ hoặc thuật toán
thất bại, 2 lỗi đọc file.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from app.config import AppConfig, config
from app.cycles.space import CycleSystem
from app.embed.rotation import Embedding
from app.errors import FormatError, PlanarError
from app.graph.core import Graph
from app.io.document import (
    cycles_from_doc,
    drawing_from_doc,
    embedding_from_doc,
    emit_json,
    graph_from_doc,
    layers_from_doc,
    load_document,
    result_from_doc,
)
from app.io.formats import parse_gm1, parse_gr1, parse_grf, read_text, write_ezi, write_gm2, write_gr1
from app.layout.drawing import Drawing
from app.planar_logging import get_logger, setup_logging
from app.planarize.descent import PlanarResult
from app.reinsert.thickness import Layer
from app.services.pipeline import PlanarPipeline

logger = get_logger(__name__)

STAGES = ("cycles", "planarize", "embed", "reinsert", "layout")


@dataclass(slots=True)
class StageState:
    graph: Graph
    cycles: CycleSystem | None = None
    result: PlanarResult | None = None
    embedding: Embedding | None = None
    reinserted: bool = False
    layers: list[Layer] = field(default_factory=list)
    drawing: Drawing | None = None


# ── input ──────────────────────────────────────────────────────────

def _read_graph(path: str) -> Graph:
    text = read_text(path)
    if Path(path).suffix == ".gr1":
        return parse_gr1(text, path)
    return parse_grf(text, path)


def _load_state(path: str) -> StageState:
    if Path(path).suffix != ".json":
        return StageState(_read_graph(path))
    doc = load_document(read_text(path), path)
    g = graph_from_doc(doc)
    state = StageState(g)
    if doc.cycles:
        state.cycles = cycles_from_doc(doc, g)
    if doc.planar is not None:
        state.result = result_from_doc(doc, g)
    if doc.rotation:
        state.embedding = embedding_from_doc(doc, g)
        state.layers = layers_from_doc(doc, g)
        state.reinserted = bool(state.layers) or state.embedding.real_edges() == frozenset(g.edges())
    if doc.coords:
        state.drawing = drawing_from_doc(doc)
    return state


def _advance(state: StageState, pipeline: PlanarPipeline, upto: str, args: argparse.Namespace) -> StageState:
    """Run the missing stages up to and including ``upto``."""
    want = STAGES.index(upto)
    g = state.graph
    if state.cycles is None:
        state.cycles = pipeline.cycles(g)
    if want >= 1 and state.result is None:
        state.result = pipeline.planarize(
            g,
            state.cycles,
            restarts=getattr(args, "restarts", None),
            evolve=getattr(args, "evolve", False),
            population=getattr(args, "pop", None),
            generations=getattr(args, "gens", None),
            random_basis=getattr(args, "random_basis", False),
        )
    if want >= 2 and state.embedding is None:
        state.embedding = pipeline.embed(g, state.cycles, state.result)
    if want >= 3 and not state.reinserted:
        outcome = pipeline.reinsert(
            state.embedding,
            sorted(state.result.deleted_edges),
            getattr(args, "mode", "crossings"),
            budget=getattr(args, "budget", None),
            attempts=getattr(args, "attempts", None),
        )
        state.embedding, state.layers, state.reinserted = outcome.embedding, outcome.layers, True
    if want >= 4 and state.drawing is None:
        boundary = None
        if getattr(args, "boundary", None):
            boundary = parse_gm1(read_text(args.boundary), args.boundary)
        state.drawing = pipeline.layout(state.embedding, boundary=boundary, refine=getattr(args, "refine", 1))
    return state


def _document(state: StageState) -> str:
    return emit_json(
        state.graph,
        sys=state.cycles,
        result=state.result,
        emb=state.embedding,
        layers=state.layers or None,
        drawing=state.drawing,
    )


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("wrote %s", out)
    else:
        sys.stdout.write(text)


# ── commands ───────────────────────────────────────────────────────

def cmd_check(args: argparse.Namespace, pipeline: PlanarPipeline) -> int:
    g = _read_graph(args.input)
    report = pipeline.check(g)
    if report.ok:
        print(f"ok: n={g.n} m={g.m} nu={g.cyclomatic_number}")
        return 0
    for violation in report.violations:
        print(violation)
    return 1


def cmd_cycles(args: argparse.Namespace, pipeline: PlanarPipeline) -> int:
    g = _read_graph(args.input)
    sys_ = pipeline.cycles(g)
    if args.gr1:
        _write(write_gr1(g), args.gr1)
    _write(write_ezi(sys_), args.out)
    return 0


def cmd_planarize(args: argparse.Namespace, pipeline: PlanarPipeline) -> int:
    state = _advance(StageState(_read_graph(args.input)), pipeline, "planarize", args)
    _write(_document(state), args.out)
    return 0 if state.result.ok else 1


def _stage_command(stage: str):
    def run(args: argparse.Namespace, pipeline: PlanarPipeline) -> int:
        state = _advance(_load_state(args.input), pipeline, stage, args)
        if stage == "layout" and args.gm2:
            boundary = parse_gm1(read_text(args.boundary), args.boundary) if args.boundary else None
            _write(write_gm2(state.drawing, list(boundary) if boundary else None), args.gm2)
        _write(_document(state), args.out)
        return 0

    return run


def cmd_render(args: argparse.Namespace, pipeline: PlanarPipeline) -> int:
    state = _advance(_load_state(args.input), pipeline, "layout", args)
    _write(pipeline.render(state.drawing, state.embedding, state.layers or None), args.out)
    return 0


# ── parser ─────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planar", description="Planar subgraphs, embeddings and drawings")
    parser.add_argument("--seed", type=int, default=config.planarize.seed, help="Seed for every random choice")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1, help="Worker count (recorded only)")
    parser.add_argument("--log-level", default=None, help="Override PLANAR_LOG_LEVEL")
    # same flags after the subcommand; SUPPRESS keeps a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--log-level", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="Validate a .grf as nonseparable")
    p.add_argument("input")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("cycles", parents=[common], help="Isometric cycles as .ezi")
    p.add_argument("input")
    p.add_argument("--out", help="Write .ezi here instead of stdout")
    p.add_argument("--gr1", help="Also write the .gr1 incidence file")
    p.set_defaults(handler=cmd_cycles)

    p = sub.add_parser("planarize", parents=[common], help="Maximal planar subgraph")
    p.add_argument("input")
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--evolve", action="store_true")
    p.add_argument("--pop", type=int, default=None)
    p.add_argument("--gens", type=int, default=None)
    p.add_argument("--random-basis", action="store_true", help="Random ν-subset bases instead of Gauss restarts")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_planarize)

    p = sub.add_parser("embed", parents=[common], help="Rotation system of the planar part")
    p.add_argument("input", help=".grf/.gr1 or a JSON document")
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(handler=_stage_command("embed"))

    p = sub.add_parser("reinsert", parents=[common], help="Reinsert deleted edges")
    p.add_argument("input", help=".grf/.gr1 or a JSON document")
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--mode", choices=("crossings", "thickness"), default="crossings")
    p.add_argument("--budget", type=int, default=None, help="Insertion orders tried")
    p.add_argument("--attempts", type=int, default=None, help="Thickness attempts")
    p.add_argument("--out")
    p.set_defaults(handler=_stage_command("reinsert"))

    p = sub.add_parser("layout", parents=[common], help="Coordinates by levels and springs")
    p.add_argument("input", help=".grf/.gr1 or a JSON document")
    p.add_argument("--boundary", help=".gm1 with fixed boundary coordinates")
    p.add_argument("--contour", choices=("circle", "rect"), default=None)
    p.add_argument("--refine", type=int, default=1)
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--mode", choices=("crossings", "thickness"), default="crossings")
    p.add_argument("--gm2", help="Also write the coordinate report")
    p.add_argument("--out")
    p.set_defaults(handler=_stage_command("layout"))

    p = sub.add_parser("render", parents=[common], help="SVG drawing")
    p.add_argument("input", help=".grf/.gr1 or a JSON document")
    p.add_argument("--boundary")
    p.add_argument("--contour", choices=("circle", "rect"), default=None)
    p.add_argument("--refine", type=int, default=1)
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--mode", choices=("crossings", "thickness"), default="crossings")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_render)
    return parser


def _configure(args: argparse.Namespace) -> AppConfig:
    cfg = config.model_copy(deep=True)
    cfg.planarize.seed = args.seed
    if getattr(args, "contour", None):
        cfg.layout.contour = args.contour
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        setup_logging(args.log_level, force=True)
    logger.info("%s: seed=%d threads=%d (single-threaded run)", args.command, args.seed, args.threads)
    pipeline = PlanarPipeline(_configure(args), seed=args.seed)
    try:
        return args.handler(args, pipeline)
    except FormatError as exc:
        logger.error("%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PlanarError as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1
