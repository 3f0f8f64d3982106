import numpy as np
import pytest

from app.errors import CycleError
from app.maclane import (
    cubic_of,
    euler_check,
    functional_report,
    is_plane_configuration,
    maclane_f,
    maclane_fp,
    quadratic_of,
)
from tests.graphs import g3

K5_PLANAR_MASK = [0, 1, 3, 7, 8]
G3_PLANAR_MASK = [0, 1, 2, 4, 8, 9, 10, 14, 15, 16]


class TestFunctionals:
    def test_quadratic_ignores_uncovered_edges(self):
        assert quadratic_of(np.array([0, 1, 2, 3, 4])) == 0 + 0 + 2 + 6
        assert cubic_of(np.array([0, 1, 2, 3, 4])) == 0 + 0 + 0 + 6 + 24

    def test_all_k5_triangles(self, k5_cycles):
        assert maclane_f(k5_cycles) == 20
        assert maclane_fp(k5_cycles) == 60
        assert euler_check(k5_cycles) == 4

    def test_k5_planar_subset(self, k5_cycles):
        report = functional_report(k5_cycles, K5_PLANAR_MASK)
        assert report.f_quadratic == 0
        assert report.fp_cubic == 0
        assert report.covered_edges == 9
        assert report.covered_vertices == 5
        assert report.euler_residual == 0
        assert k5_cycles.xor(K5_PLANAR_MASK).ids() == (8, 9, 10)

    def test_empty_mask(self, k5_cycles):
        assert maclane_f(k5_cycles, []) == 0
        assert euler_check(k5_cycles, []) == -1

    def test_start_and_end_of_the_descent(self):
        _, sys = g3()
        assert maclane_f(sys) == 92
        assert maclane_f(sys, G3_PLANAR_MASK) == 0
        assert euler_check(sys, G3_PLANAR_MASK) == 0

    def test_bad_mask(self, k5_cycles):
        with pytest.raises(CycleError):
            maclane_f(k5_cycles, [-1])


class TestPlaneConfiguration:
    def test_dependent_triangles(self, k5_cycles):
        assert is_plane_configuration(k5_cycles, [0, 1, 3, 6])

    def test_not_a_dependency(self, k5_cycles):
        assert not is_plane_configuration(k5_cycles, [0, 1])
        assert not is_plane_configuration(k5_cycles, [])

    def test_repeated_member_counts_twice(self, k5_cycles):
        assert is_plane_configuration(k5_cycles, [2, 2])
