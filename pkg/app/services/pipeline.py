"""
Pipeline orchestrator: check → cycles → planarize → embed → reinsert → layout → render.

Mỗi bước là một method riêng để CLI gọi lẻ từng bước (đọc tài liệu JSON của
bước trước) hoặc chạy cả chuỗi qua ``run``. Mọi bước ngẫu nhiên dùng cùng một
seed, nên chạy lẻ và chạy cả chuỗi cho cùng kết quả.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Mapping

from app.config import AppConfig, config as default_config
from app.cycles.space import CycleSystem, enumerate_isometric_cycles
from app.embed.rotation import Embedding, verify_embedding
from app.errors import EmbeddingError, GraphError
from app.graph.core import Graph, ValidationReport, spanning_split, validate_nonseparable
from app.io.render import emit_svg
from app.layout.drawing import Drawing, Point
from app.layout.levels import level_structure, place_on_contour, topo_sections
from app.layout.spring import assemble_spring_system, iterative_refine, solve_spring
from app.planar_logging import get_logger
from app.planarize.descent import PlanarResult
from app.planarize.search import evolutionary_search, planarize_from_random_basis, random_restart_pipeline
from app.reinsert.routing import minimize_crossings
from app.reinsert.thickness import Layer, thickness_decompose

logger = get_logger(__name__)

ReinsertMode = Literal["crossings", "thickness"]


@dataclass(slots=True)
class ReinsertOutcome:
    embedding: Embedding
    crossings: int = 0
    layers: list[Layer] = field(default_factory=list)


@dataclass(slots=True)
class PipelineRun:
    graph: Graph
    cycles: CycleSystem
    result: PlanarResult
    embedding: Embedding
    reinsert: ReinsertOutcome
    drawing: Drawing


class PlanarPipeline:
    """
    Orchestrator cho một đồ thị: giữ cấu hình và seed, log từng bước.
    """

    def __init__(self, cfg: AppConfig | None = None, *, seed: int | None = None):
        self._config = cfg or default_config
        self.seed = self._config.planarize.seed if seed is None else seed

    # ── check / cycles ──

    def check(self, g: Graph) -> ValidationReport:
        report = validate_nonseparable(g)
        if report.ok:
            logger.info("check: n=%d m=%d nonseparable", g.n, g.m)
        else:
            logger.info("check: %s", "; ".join(report.violations))
        return report

    def cycles(self, g: Graph) -> CycleSystem:
        report = self.check(g)
        if not report.ok:
            raise GraphError("; ".join(report.violations))
        sys = enumerate_isometric_cycles(g)
        logger.info("cycles: %d isometric cycles, ν=%d", len(sys), g.cyclomatic_number)
        return sys

    # ── planarize ──

    def planarize(
        self,
        g: Graph,
        sys: CycleSystem,
        *,
        restarts: int | None = None,
        evolve: bool = False,
        population: int | None = None,
        generations: int | None = None,
        random_basis: bool = False,
    ) -> PlanarResult:
        cfg = self._config.planarize
        split = spanning_split(g)
        if random_basis:
            result = planarize_from_random_basis(g, sys, self.seed, split=split)
        elif evolve:
            evolution = evolutionary_search(
                g,
                sys,
                cfg.population if population is None else population,
                cfg.generations if generations is None else generations,
                self.seed,
                mutation_rate=cfg.mutation_rate,
                split=split,
            )
            logger.info("planarize: evolution fitness %s over %d evaluations", evolution.history, evolution.evaluations)
            result = evolution.best
        else:
            result = random_restart_pipeline(
                g, sys, cfg.restarts if restarts is None else restarts, self.seed, split=split,
            )
        logger.info(
            "planarize: keeps %d of %d edges, deleted %s",
            result.edges_kept, g.m, sorted(result.deleted_edges),
        )
        return result

    # ── embed / reinsert ──

    def embed(self, g: Graph, sys: CycleSystem, result: PlanarResult) -> Embedding:
        if not result.ok:
            raise EmbeddingError("planarize did not reach a plane configuration")
        emb = Embedding.from_result(g, sys, result)
        report = verify_embedding(emb)
        if not report.ok:
            raise EmbeddingError("; ".join(report.problems) or f"genus {report.genus}")
        logger.info("embed: V=%d E=%d F=%d", report.vertex_count, report.edge_count, report.face_count)
        return emb

    def reinsert(
        self,
        emb: Embedding,
        deleted: list[int],
        mode: ReinsertMode = "crossings",
        *,
        budget: int | None = None,
        attempts: int | None = None,
    ) -> ReinsertOutcome:
        if mode == "thickness":
            layers = thickness_decompose(emb.graph, emb, attempts, self.seed)
            logger.info("reinsert: %d thickness layers", len(layers))
            return ReinsertOutcome(embedding=layers[0].embedding, layers=layers)
        if mode != "crossings":
            raise ValueError(f"unknown reinsert mode {mode!r}")
        drawn, total = minimize_crossings(emb, sorted(deleted), budget, self.seed)
        report = verify_embedding(drawn)
        if not report.ok:
            raise EmbeddingError("; ".join(report.problems) or f"genus {report.genus}")
        logger.info("reinsert: %d crossings", total)
        return ReinsertOutcome(embedding=drawn, crossings=total)

    # ── layout / render ──

    def layout(
        self,
        emb: Embedding,
        *,
        boundary: Mapping[int, Point] | None = None,
        contour: str | None = None,
        radius: float | None = None,
        refine: int = 1,
    ) -> Drawing:
        """Contour placement for the rim (unless a boundary is given), then the spring solve."""
        ls = level_structure(emb)
        if boundary is None:
            placed = place_on_contour(ls, topo_sections(ls, emb), contour or self._config.layout.contour, radius, emb)
            boundary = {v: placed.coords[v] for v in ls.sequence(1)}
        if refine > 1:
            drawing = iterative_refine(emb, ls, boundary, refine)[-1]
        else:
            drawing = solve_spring(assemble_spring_system(emb, boundary))
        logger.info("layout: %d vertices, %d fixed", len(drawing.coords), len(drawing.fixed))
        return drawing

    def render(self, drawing: Drawing, emb: Embedding, layers: list[Layer] | None = None) -> str:
        return emit_svg(drawing, emb, [layer.edges for layer in layers] if layers else None)

    # ── whole chain ──

    def run(
        self,
        g: Graph,
        mode: ReinsertMode = "crossings",
        *,
        restarts: int | None = None,
        boundary: Mapping[int, Point] | None = None,
    ) -> PipelineRun:
        sys = self.cycles(g)
        result = self.planarize(g, sys, restarts=restarts)
        emb = self.embed(g, sys, result)
        outcome = self.reinsert(emb, sorted(result.deleted_edges), mode)
        drawing = self.layout(outcome.embedding, boundary=boundary)
        return PipelineRun(g, sys, result, emb, outcome, drawing)
