import logging

import pytest

from app.config import AppConfig, config
from app.embed.rotation import verify_embedding
from app.errors import GraphError
from app.graph.core import Graph
from app.layout.drawing import segments_cross
from app.planar_logging import get_logger, log_path, setup_logging
from app.services.pipeline import PlanarPipeline
from tests.graphs import complete


class TestPlanarPipeline:
    @classmethod
    def setup_class(cls):
        cls.pipeline = PlanarPipeline(seed=0)
        cls.run = cls.pipeline.run(complete(5), restarts=3)

    def test_one_edge_deleted_and_one_crossing(self):
        assert len(self.run.result.deleted_edges) == 1
        assert self.run.embedding.face_count == 6
        assert self.run.reinsert.crossings == 1
        assert verify_embedding(self.run.reinsert.embedding).ok

    def test_drawing_covers_the_dummy(self):
        assert sorted(self.run.drawing.coords) == [1, 2, 3, 4, 5, 6]

    def test_same_seed_same_run(self):
        again = PlanarPipeline(seed=0).run(complete(5), restarts=3)
        assert again.result.deleted_edges == self.run.result.deleted_edges
        assert again.drawing.coords == self.run.drawing.coords

    def test_planar_segments_do_not_cross(self):
        emb = self.run.reinsert.embedding
        assert segments_cross(self.run.drawing, emb.rotation.edges()) == []

    def test_thickness_mode(self):
        run = self.pipeline.run(complete(5), "thickness", restarts=3)
        assert len(run.reinsert.layers) == 2
        assert run.reinsert.crossings == 0
        assert frozenset().union(*(layer.edges for layer in run.reinsert.layers)) == frozenset(range(1, 11))

    def test_separable_graph(self):
        g = Graph.from_edges(3, [(1, 2), (2, 3)])
        assert not self.pipeline.check(g).ok
        with pytest.raises(GraphError):
            self.pipeline.cycles(g)

    def test_unknown_reinsert_mode(self):
        with pytest.raises(ValueError):
            self.pipeline.reinsert(self.run.embedding, [], "bogus")


class TestConfig:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("PLANAR_SEED", "7")
        monkeypatch.setenv("PLANAR_CONTOUR", "rect")
        monkeypatch.setenv("PLANAR_RESIDUAL_TOL", "1e-6")
        cfg = AppConfig.from_env()
        assert cfg.planarize.seed == 7
        assert cfg.layout.contour == "rect"
        assert cfg.layout.residual_tol == pytest.approx(1e-6)

    def test_pipeline_takes_seed_from_config(self, monkeypatch):
        monkeypatch.setenv("PLANAR_SEED", "11")
        assert PlanarPipeline(AppConfig.from_env()).seed == 11
        assert PlanarPipeline(AppConfig.from_env(), seed=2).seed == 2


class TestLogging:
    def test_level_override_and_log_file(self, monkeypatch, tmp_path):
        monkeypatch.setattr(config.logging, "log_dir", str(tmp_path))
        assert log_path() == str(tmp_path / "planar.log")
        setup_logging("debug", force=True)
        try:
            assert logging.getLogger().level == logging.DEBUG
            get_logger("tests").debug("level check")
            assert (tmp_path / "planar.log").exists()
        finally:
            setup_logging("INFO", force=True)

    def test_unknown_level_falls_back_to_info(self, monkeypatch, tmp_path):
        monkeypatch.setattr(config.logging, "log_dir", str(tmp_path))
        setup_logging("chatty", force=True)
        assert logging.getLogger().level == logging.INFO
