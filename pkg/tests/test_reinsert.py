import itertools
from fractions import Fraction

import networkx as nx
import pytest

from app.cycles.space import Cycle
from app.embed.rotation import Embedding, verify_embedding
from app.errors import EmbeddingError, GraphError
from app.planarize.descent import fragmentary_greedy
from app.reinsert.kbs import chords_cross, conflict_reduce, insert_chords, kbs_ring, project
from app.reinsert.routing import (
    apply_route,
    crossing_lower_bound,
    crossing_upper_informational,
    enumerate_routes,
    insert_vertex,
    minimize_crossings,
    remove_vertex,
    route_edge,
)
from app.reinsert.thickness import bipartite_thickness_reference, thickness_decompose, thickness_reference
from tests.graphs import complete, cyclic_equal

OCTAHEDRON_FACES = [
    [1, 3, 4], [1, 4, 5], [1, 5, 2],
    [6, 2, 3], [6, 3, 4], [6, 4, 5], [6, 5, 2],
]
K7_FACES = [
    [1, 2, 5], [2, 4, 5], [1, 4, 5], [2, 3, 6], [3, 4, 6],
    [2, 4, 6], [1, 3, 7], [3, 4, 7], [1, 4, 7],
]


def embed_faces(g, faces, rim):
    kept = [Cycle.from_vertices(g, f) for f in faces]
    return Embedding.from_cycles(g, kept, Cycle.from_vertices(g, rim))


def hexagon():
    g = complete(6)
    ring = Cycle.from_vertices(g, [1, 2, 3, 4, 5, 6])
    return g, Embedding.from_cycles(g, [ring], ring)


class TestRouting:
    def test_minimal_routes_of_the_missing_edge(self, g10_embedding):
        routes = route_edge(g10_embedding, 14)
        assert len(routes) == 3
        assert all(r.crossings == 1 for r in routes)
        assert all(r.ends == (2, 4) for r in routes)

    def test_apply_minimal_route(self, g10_embedding):
        route = route_edge(g10_embedding, 14)[0]
        drawn = apply_route(g10_embedding, route)
        assert drawn.crossings == 1
        assert 14 in drawn.real_edges()
        assert verify_embedding(drawn).ok
        assert drawn.euler_characteristic == 2

    def test_two_crossing_route(self, g10_embedding):
        routes = enumerate_routes(g10_embedding, 2, 4, 2)
        assert [r.crossings for r in routes] == sorted(r.crossings for r in routes)
        wanted = [frozenset({1, 5}), frozenset({3, 5})]
        route = next(r for r in routes if [frozenset(d) for d in r.crossed] == wanted)
        drawn = apply_route(g10_embedding, route)
        assert drawn.dummies == {8: (3, 14), 9: (8, 14)}
        assert cyclic_equal(drawn.rotation.neighbors(8), (1, 2, 5, 9))
        assert drawn.crossings == 2
        assert verify_embedding(drawn).ok

    def test_route_needs_embedded_endpoints(self, g10_embedding):
        with pytest.raises(EmbeddingError):
            route_edge(g10_embedding, 1)

    def test_k5_costs_one_crossing(self, k5, k5_cycles):
        result = fragmentary_greedy(k5_cycles, range(10))
        emb = Embedding.from_result(k5, k5_cycles, result)
        drawn, total = minimize_crossings(emb, sorted(result.deleted_edges), 3, 0)
        assert total == 1
        assert drawn.crossings == 1
        assert drawn.real_edges() == frozenset(k5.edges())
        assert verify_embedding(drawn).ok

    def test_k6_costs_three_crossings(self):
        g = complete(6)
        emb = embed_faces(g, OCTAHEDRON_FACES, [1, 2, 3])
        deleted = [g.edge_id(1, 6), g.edge_id(2, 4), g.edge_id(3, 5)]
        drawn, total = minimize_crossings(emb, deleted, 6, 0)
        assert total == 3
        assert len(drawn.dummies) == 3
        assert all(len(drawn.rotation.neighbors(d)) == 4 for d in drawn.dummies)
        assert verify_embedding(drawn).ok


class TestVertices:
    def test_remove_and_reinsert(self, g10_embedding):
        g = g10_embedding.graph
        without = remove_vertex(g10_embedding, 7)
        assert not without.is_embedded(7)
        assert without.face_count == 6
        assert verify_embedding(without).ok
        incident = [g.edge_id(7, u) for u in (2, 3, 6)]
        back, leftover = insert_vertex(without, 7, incident)
        assert leftover == []
        assert back.face_count == 8
        assert verify_embedding(back).ok

    def test_remove_unknown(self, g10_embedding):
        with pytest.raises(EmbeddingError):
            remove_vertex(g10_embedding, 99)

    def test_insert_twice(self, g10_embedding):
        with pytest.raises(EmbeddingError):
            insert_vertex(g10_embedding, 7, [])


class TestRimChords:
    @classmethod
    def setup_class(cls):
        cls.g, cls.emb = hexagon()
        cls.ring = kbs_ring(cls.emb)

    def test_ring_starts_at_lowest_edge(self):
        assert len(self.ring) == 6
        assert self.ring.edge_ids[0] == 1
        assert sorted(self.ring.edge_ids) == [1, 5, 6, 10, 13, 15]

    def test_project(self):
        assert project(self.ring, (1, 4)) == (1, 6, 10)
        assert project(self.ring, (4, 1)) == (1, 6, 10)
        assert project(self.ring, (2, 5)) == (6, 10, 13)

    def test_crossing_is_interleaving(self):
        chords = [(a, b) for a, b in itertools.combinations(range(1, 7), 2) if (b - a) % 6 not in (1, 5)]
        for a, b in itertools.combinations(chords, 2):
            if set(a) & set(b):
                expected = False
            else:
                expected = sum(a[0] < v < a[1] for v in b) == 1
            assert chords_cross(self.ring, a, b) == expected

    def test_conflict_reduce(self):
        diagonals = [self.g.edge_id(1, 4), self.g.edge_id(2, 5), self.g.edge_id(3, 6)]
        live, removed = conflict_reduce(self.ring, diagonals)
        assert removed == [3, 8]
        assert live == [12]

    def test_insert_fan(self):
        fan = [self.g.edge_id(1, v) for v in (3, 4, 5)]
        drawn = insert_chords(self.emb, fan)
        assert drawn.face_count == 5
        assert verify_embedding(drawn).ok

    def test_off_rim_vertex(self, g10_embedding):
        ring = kbs_ring(g10_embedding)
        with pytest.raises(EmbeddingError):
            project(ring, (1, 2))


class TestThickness:
    def test_complete_graph_seven(self):
        g = complete(7)
        base = embed_faces(g, K7_FACES, [1, 2, 3])
        layers = thickness_decompose(g, base, attempts=5, seed=0)
        assert len(layers) == thickness_reference(7) == 2
        assert frozenset().union(*(layer.edges for layer in layers)) == frozenset(g.edges())
        for layer in layers:
            assert verify_embedding(layer.embedding).ok
            planar, _ = nx.check_planarity(g.to_networkx(layer.edges))
            assert planar

    def test_edge_without_a_common_face_opens_a_layer(self, g10_embedding):
        g = g10_embedding.graph
        layers = thickness_decompose(g, g10_embedding, attempts=1, seed=0)
        assert len(layers) == 2
        assert layers[1].edges == frozenset({14})

    def test_every_layer_carries_all_vertices(self):
        g = complete(7)
        base = embed_faces(g, K7_FACES, [1, 2, 3])
        for layer in thickness_decompose(g, base, attempts=3, seed=1):
            assert set(layer.embedding.rotation.sigma) == set(g.vertices())
            report = verify_embedding(layer.embedding)
            assert report.ok
            assert report.vertex_count == g.n

    def test_references(self):
        assert [thickness_reference(n) for n in (1, 4, 5, 8, 9, 10, 11, 16)] == [1, 1, 2, 2, 3, 3, 3, 3]
        assert bipartite_thickness_reference(3, 3) == 2
        assert bipartite_thickness_reference(5, 5) == 2
        with pytest.raises(GraphError):
            thickness_reference(0)


class TestBounds:
    def test_lower_bound_needs_dense_graph(self):
        assert crossing_lower_bound(5, 10) is None
        assert crossing_lower_bound(100, 800) == Fraction(800)

    def test_informational_constants(self):
        bounds = crossing_upper_informational(100, 800)
        assert bounds.lower == 800
        assert bounds.constant_29 == Fraction(51200, 29)
        assert bounds.constant_33_75 == Fraction(40960, 27)
        sparse = crossing_upper_informational(10, 20)
        assert sparse.lower is None and sparse.constant_29 is None and sparse.constant_33_75 is None

    def test_dense_constants_start_at_the_boundary(self):
        at_7n = crossing_upper_informational(100, 700)
        assert at_7n.lower == Fraction(8575, 16)
        assert at_7n.constant_29 == Fraction(34300, 29)
        assert at_7n.constant_33_75 is None
        assert crossing_upper_informational(100, 750).constant_33_75 == 1250
        assert crossing_upper_informational(100, 699).constant_29 is None
