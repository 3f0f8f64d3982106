import networkx as nx
import pytest

from app.cycles.space import Cycle
from app.embed.rotation import (
    Embedding,
    RotationSystem,
    common_faces,
    cycles_to_rotation,
    face_darts,
    insert_edge_in_face,
    trace_faces,
    verify_embedding,
)
from app.errors import EmbeddingError
from app.planarize.descent import fragmentary_greedy
from tests.graphs import G10_RIM, complete, cyclic_equal, g10


def sorted_rotation(g) -> RotationSystem:
    return RotationSystem({v: tuple(sorted(g.neighbors(v))) for v in g.vertices()})


class TestRotationSystem:
    def test_succ_wraps(self):
        rot = RotationSystem({1: (2, 3, 4)})
        assert rot.succ(1, 4) == 2
        with pytest.raises(EmbeddingError):
            rot.succ(1, 5)

    def test_faces_of_a_triangle(self):
        rot = RotationSystem({1: (2, 3), 2: (3, 1), 3: (1, 2)})
        faces = trace_faces(rot)
        assert len(faces) == 2
        assert all(len(f) == 3 for f in faces)
        darts = [d for f in faces for d in face_darts(f)]
        assert len(darts) == len(set(darts)) == 6

    def test_every_dart_on_one_face(self, k5):
        faces = trace_faces(sorted_rotation(k5))
        darts = [d for f in faces for d in face_darts(f)]
        assert len(darts) == len(set(darts)) == 2 * k5.m


class TestCyclesToRotation:
    def test_rotation_at_vertex_three(self):
        g, kept, rim = g10()
        rot = cycles_to_rotation(g, kept, rim)
        assert cyclic_equal(rot.neighbors(3), (1, 2, 7, 4, 5))

    def test_embedding_of_the_planar_part(self, g10_embedding):
        emb = g10_embedding
        report = verify_embedding(emb)
        assert report.ok
        assert (report.vertex_count, report.edge_count, report.face_count) == (7, 13, 8)
        assert emb.euler_characteristic == 2
        assert set(emb.rim) == set(G10_RIM)
        assert emb.real_edges() == frozenset(range(1, 14))

    def test_rotation_matches_networkx_planarity(self, g10_embedding):
        emb = g10_embedding
        nxg = nx.Graph(emb.rotation.edges())
        planar, _ = nx.check_planarity(nxg)
        assert planar

    def test_overfull_faces_rejected(self, k5, k5_cycles):
        rim = Cycle.from_edges(k5, [8, 9, 10])
        with pytest.raises(EmbeddingError):
            cycles_to_rotation(k5, list(k5_cycles.cycles), rim)

    def test_from_greedy_result(self, k5, k5_cycles):
        result = fragmentary_greedy(k5_cycles, range(10))
        emb = Embedding.from_result(k5, k5_cycles, result)
        report = verify_embedding(emb)
        assert report.ok
        assert (emb.vertex_count, emb.edge_count, emb.face_count) == (5, 9, 6)
        assert set(emb.rim) == {3, 4, 5}


class TestVerify:
    def test_nonplanar_rotation_has_genus(self, k5):
        emb = Embedding.from_rotation(k5, sorted_rotation(k5))
        report = verify_embedding(emb)
        assert not report.ok
        assert report.genus >= 1
        assert report.euler_characteristic < 2

    def test_empty_layer(self, k5):
        emb = Embedding.empty(k5, [1, 2])
        assert emb.face_count == 0
        assert emb.rim_face == -1
        assert verify_embedding(emb).ok


class TestFaceSplitting:
    def test_triangle_from_nothing(self, k5):
        emb = Embedding.empty(k5)
        emb = insert_edge_in_face(emb, 1, 2)
        emb = insert_edge_in_face(emb, 2, 3)
        assert emb.face_count == 1
        emb = insert_edge_in_face(emb, 1, 3)
        assert emb.face_count == 2
        assert emb.euler_characteristic == 2
        assert emb.real_edges() == frozenset({1, 2, 5})
        assert verify_embedding(emb).ok

    def test_chord_splits_a_quadrilateral(self, g10_embedding):
        emb = g10_embedding
        quad = next(i for i, f in enumerate(emb.faces) if set(f) == {1, 5, 6, 2})
        split = insert_edge_in_face(emb, 1, 6, quad, edge_id=99)
        assert split.face_count == emb.face_count + 1
        assert verify_embedding(split).ok
        assert 99 in split.real_edges()

    def test_no_common_face(self, g10_embedding):
        assert common_faces(g10_embedding, 2, 4) == []
        with pytest.raises(EmbeddingError, match="share no face"):
            insert_edge_in_face(g10_embedding, 2, 4)

    def test_existing_edge(self, g10_embedding):
        with pytest.raises(EmbeddingError):
            insert_edge_in_face(g10_embedding, 1, 2)

    def test_insertion_is_persistent(self, g10_embedding):
        before = g10_embedding.rotation.sigma
        quad = next(i for i, f in enumerate(g10_embedding.faces) if set(f) == {1, 5, 6, 2})
        insert_edge_in_face(g10_embedding, 1, 6, quad, edge_id=99)
        assert g10_embedding.rotation.sigma == before


def test_complete_graph_four_embeds():
    g = complete(4)
    faces = [Cycle.from_vertices(g, f) for f in ([1, 2, 3], [1, 3, 4], [2, 4, 3])]
    emb = Embedding.from_cycles(g, faces, Cycle.from_vertices(g, [1, 2, 4]))
    assert verify_embedding(emb).ok
    assert emb.face_count == 4
