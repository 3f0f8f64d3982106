import random

import networkx as nx
import pytest

from app.cycles.space import CycleSystem, enumerate_isometric_cycles, gf2_rank
from app.embed.rotation import Embedding, verify_embedding
from app.errors import PlanarError
from app.graph.core import Graph
from app.maclane import euler_check, maclane_f, maclane_fp
from app.planarize.descent import cubic_descent, fragmentary_greedy, steepest_descent_basis
from app.planarize.search import (
    crossover_merge,
    evolutionary_search,
    mutate,
    planarize_from_random_basis,
    planarize_permutation,
    random_restart_pipeline,
)
from tests.graphs import complete, g1, g3, g5


def kept_graph_is_planar(g: Graph, deleted) -> bool:
    kept = [e for e in g.edges() if e not in deleted]
    planar, _ = nx.check_planarity(g.to_networkx(kept))
    return planar


class TestSteepestDescent:
    @classmethod
    def setup_class(cls):
        cls.g, cls.sys = g3()
        cls.descent = steepest_descent_basis(cls.sys, cls.g.cyclomatic_number)

    def test_removal_order(self):
        assert [s.removed_cycle for s in self.descent.trace] == [12, 6, 3, 11, 5, 13, 7]

    def test_functional_trace(self):
        assert [s.functional_after for s in self.descent.trace] == [64, 44, 28, 18, 8, 0, 0]

    def test_final_basis(self):
        assert self.descent.complete
        assert self.descent.mask == frozenset({0, 1, 2, 4, 8, 9, 10, 14, 15, 16})
        assert maclane_f(self.sys, self.descent.mask) == 0
        assert euler_check(self.sys, self.descent.mask) == 0

    def test_edge_cover_rule_is_optional(self):
        g = complete(4)
        # 1234 is the only cycle on e1; dropping it keeps every vertex
        sys = CycleSystem.from_edge_lists(g, [[1, 3, 4, 6], [2, 3, 6], [4, 5, 6], [2, 3, 4, 5]])
        plain = steepest_descent_basis(sys, 3)
        assert [s.removed_cycle for s in plain.trace] == [0]
        assert plain.trace[0].functional_after == 0
        covered = steepest_descent_basis(sys, 3, cover_edges=True)
        assert [s.removed_cycle for s in covered.trace] == [3]
        assert covered.trace[0].vetoed == [0]
        assert covered.trace[0].functional_after == 2
        assert covered.mask == frozenset({0, 1, 2})


class TestCubicDescent:
    @classmethod
    def setup_class(cls):
        cls.g, cls.sys = g5()
        cls.result = cubic_descent(cls.sys, range(8))

    def test_two_steps(self):
        steps = self.result.trace
        assert [s.removed_cycle for s in steps] == [4, 3]
        assert [s.functional_after for s in steps] == [6, 0]
        assert steps[0].edges_deleted == frozenset({21})
        assert steps[1].edges_deleted == frozenset({6})
        assert 7 in steps[0].vetoed

    def test_outcome(self):
        assert self.result.ok
        assert self.result.deleted_edges == frozenset({6, 21})
        assert self.result.kept_cycles == frozenset({0, 1, 2, 5, 6, 7})
        assert self.result.edges_kept == 19
        assert kept_graph_is_planar(self.g, self.result.deleted_edges)

    def test_rim_closes_the_kept_faces(self):
        assert self.result.rim == self.sys.xor(sorted(self.result.kept_cycles))


class TestFragmentaryGreedy:
    def test_k5_identity_order(self, k5_cycles):
        result = fragmentary_greedy(k5_cycles, range(10))
        assert result.kept_cycles == frozenset({0, 1, 3, 7, 8})
        assert result.rim.ids() == (8, 9, 10)
        assert result.deleted_edges == frozenset({4})
        assert result.permutation == list(range(10))

    def test_result_is_planar_for_any_order(self, seven):
        sys = enumerate_isometric_cycles(seven)
        rng = random.Random(1)
        for _ in range(10):
            order = list(range(len(sys)))
            rng.shuffle(order)
            result = fragmentary_greedy(sys, order)
            assert maclane_f(sys, result.kept_cycles) == 0
            assert kept_graph_is_planar(seven, result.deleted_edges)


class TestRestarts:
    def test_k5_needs_one_deletion(self, k5, k5_cycles):
        result = random_restart_pipeline(k5, k5_cycles, 5, 42)
        assert result.ok
        assert len(result.deleted_edges) == 1
        assert result.seed == 42
        assert kept_graph_is_planar(k5, result.deleted_edges)

    def test_planar_graph_keeps_everything(self):
        wheel = Graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6), (2, 6)])
        sys = enumerate_isometric_cycles(wheel)
        assert len(sys) == 6
        result = random_restart_pipeline(wheel, sys, 3, 0)
        assert result.ok
        assert not result.deleted_edges
        assert len(result.kept_cycles) == wheel.cyclomatic_number

    def test_seven_vertex_graph(self, seven):
        sys = enumerate_isometric_cycles(seven)
        result = random_restart_pipeline(seven, sys, 10, 42)
        assert result.ok
        assert 1 <= len(result.deleted_edges) <= 2
        assert kept_graph_is_planar(seven, result.deleted_edges)

    def test_same_seed_same_result(self, seven):
        sys = enumerate_isometric_cycles(seven)
        a = random_restart_pipeline(seven, sys, 4, 9)
        b = random_restart_pipeline(seven, sys, 4, 9)
        assert a.deleted_edges == b.deleted_edges
        assert a.permutation == b.permutation
        assert a.restart == b.restart

    def test_best_is_minimal_over_restarts(self, seven):
        sys = enumerate_isometric_cycles(seven)
        rng = random.Random(7)
        singles = []
        for _ in range(4):
            permutation = list(range(len(sys)))
            rng.shuffle(permutation)
            singles.append(planarize_permutation(seven, sys, permutation))
        best = random_restart_pipeline(seven, sys, 4, 7)
        assert len(best.deleted_edges) == min(len(r.deleted_edges) for r in singles if r.ok)

    def test_restarts_must_be_positive(self, k5, k5_cycles):
        with pytest.raises(PlanarError):
            random_restart_pipeline(k5, k5_cycles, 0, 1)


class TestEvolution:
    def test_crossover_merge(self):
        assert crossover_merge([2, 0, 1, 3], [1, 3, 0, 2]) == [1, 2, 0, 3]

    def test_crossover_of_identical_parents(self):
        assert crossover_merge([3, 1, 2, 0], [3, 1, 2, 0]) == [3, 1, 2, 0]

    def test_crossover_rejects_foreign_parents(self):
        with pytest.raises(PlanarError):
            crossover_merge([0, 1, 2], [0, 1, 3])

    def test_mutate_is_one_transposition(self):
        parent = list(range(8))
        child = mutate(parent, random.Random(0))
        assert sorted(child) == parent
        assert sum(a != b for a, b in zip(parent, child)) == 2

    def test_never_worse_than_restarts(self, seven):
        sys = enumerate_isometric_cycles(seven)
        restarts = random_restart_pipeline(seven, sys, 6, 3)
        evolution = evolutionary_search(seven, sys, 6, 3, 3, mutation_rate=0.5)
        assert evolution.best.edges_kept >= restarts.edges_kept
        assert evolution.history == sorted(evolution.history)
        assert evolution.evaluations == 6 * 4
        assert kept_graph_is_planar(seven, evolution.best.deleted_edges)

    def test_population_of_one(self, k5, k5_cycles):
        with pytest.raises(PlanarError):
            evolutionary_search(k5, k5_cycles, 1, 1, 0)


class TestRandomBasis:
    def test_k5(self, k5):
        sys = enumerate_isometric_cycles(k5)
        result = planarize_from_random_basis(k5, sys, 5)
        assert len(result.permutation) == k5.cyclomatic_number
        if result.ok:
            assert kept_graph_is_planar(k5, result.deleted_edges)

    def test_gives_up(self, k5):
        sys = enumerate_isometric_cycles(k5)
        with pytest.raises(PlanarError):
            planarize_from_random_basis(k5, sys, 5, attempts=0)



def k5_system():
    g = complete(5)
    return g, enumerate_isometric_cycles(g)


def k33_system():
    g = Graph.from_edges(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    return g, enumerate_isometric_cycles(g)


STRATEGIES = {
    "steepest+cubic": lambda g, sys: cubic_descent(sys, steepest_descent_basis(sys, g.cyclomatic_number).mask),
    "greedy": lambda g, sys: fragmentary_greedy(sys, range(len(sys))),
    "restarts": lambda g, sys: random_restart_pipeline(g, sys, 8, 4),
    "evolution": lambda g, sys: evolutionary_search(g, sys, 4, 3, 4).best,
    "random-basis": lambda g, sys: planarize_from_random_basis(g, sys, 4, attempts=500),
}


def face_edge_sets(emb: Embedding) -> list[tuple[int, ...]]:
    g = emb.graph
    return sorted(
        tuple(sorted(g.edge_id(face[i], face[(i + 1) % len(face)]) for i in range(len(face))))
        for face in emb.faces
    )


class TestPlaneFragmentProperties:
    @pytest.mark.parametrize("strategy", list(STRATEGIES))
    @pytest.mark.parametrize("build", [g1, g3, g5, k5_system, k33_system], ids=["g1", "g3", "g5", "k5", "k33"])
    def test_successful_result_is_a_plane_fragment(self, build, strategy):
        g, sys = build()
        result = STRATEGIES[strategy](g, sys)
        if strategy == "greedy":
            assert result.ok
        if not result.ok:
            return
        kept = sorted(result.kept_cycles)
        assert maclane_fp(sys, kept) == 0
        assert euler_check(sys, kept) == 0
        assert gf2_rank(sys[k].edges.bits for k in kept) == len(kept)
        assert kept_graph_is_planar(g, result.deleted_edges)

        emb = Embedding.from_result(g, sys, result)
        expected = sorted([tuple(sys[k].edges.ids()) for k in kept] + [tuple(result.rim.ids())])
        assert face_edge_sets(emb) == expected
        assert emb.euler_characteristic == 2
        assert verify_embedding(emb).ok
