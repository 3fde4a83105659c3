from fractions import Fraction

import numpy as np
import pytest

from projtverberg import linalg
from projtverberg.centerpoint import (SearchConfig, WeightVector, _limit_subspace,
                                      classical_center_point,
                                      dual_center_point_search, gram_matrix,
                                      min_ray_crossings, search_center_subspace,
                                      subspace_from_weights, tukey_depth, w_from_weights)
from projtverberg.geometry import PointConfig, hyperplane_at_infinity, span
from projtverberg.pieces import verify_center_subspace

SQUARE = [(1, 1), (-1, 1), (1, -1), (-1, -1)]


def test_tukey_depth_examples():
    assert tukey_depth((1,), [(0,), (1,), (2,)]) == 2
    tri = [(0, 0), (3, 0), (0, 3)]
    assert tukey_depth((1, 1), tri) == 1
    # the center plus four of the eight others lie in any closed half-plane through it
    grid = [(i, j) for i in range(3) for j in range(3)]
    assert tukey_depth((1, 1), grid) == 5


def test_classical_center_point():
    c, depth = classical_center_point([(0,), (1,), (2,)])
    assert c == (1,) and depth == 2
    c, depth = classical_center_point(SQUARE)
    assert c == (0, 0) and depth == 2
    rng = np.random.default_rng(3)
    pts = [tuple(int(x) for x in p) for p in rng.integers(-9, 10, size=(7, 2))]
    c, depth = classical_center_point(pts)
    assert depth >= 3 and tukey_depth(c, pts) == depth


def test_ray_crossings():
    H = [((1,), 0), ((1,), 2)]
    assert min_ray_crossings((1,), H) == 1
    tri = [((0, 1), 0), ((1, 0), 0), ((1, 1), 3)]
    assert min_ray_crossings((1, 1), tri) == 1
    assert min_ray_crossings((0, 1), tri) == 1       # on x = 0, which always counts
    assert min_ray_crossings((0, 0), tri) == 2


def test_dual_search():
    tri = [((0, 1), 0), ((1, 0), 0), ((1, 1), 3)]
    c, val = dual_center_point_search(tri)
    assert val >= 1
    c, val = dual_center_point_search([((1, 1), 1)])
    assert val == 1 and c[0] + c[1] == 1


def test_gram_matrix_examples():
    Q = gram_matrix([1], [(0, 1, 0)], 1)
    assert Q == [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    Q = gram_matrix([Fraction(1, 2)] * 2, [(1, 0, 0), (0, 1, 0)], 1)
    assert [Q[i][i] for i in range(3)] == [Fraction(3, 2), Fraction(3, 2), 1]
    assert linalg.is_positive_definite(Q)
    with pytest.raises(ValueError):
        gram_matrix([1], [(1, 0)], 0)


def test_w_from_weights_examples():
    I = [[int(i == j) for j in range(3)] for i in range(3)]
    assert w_from_weights(span([(1, 0, 0)]), I) == span([(0, 1, 0), (0, 0, 1)])
    D = [[1, 0, 0], [0, 2, 0], [0, 0, 1]]
    assert w_from_weights(span([(1, 0, 0)]), D) == span([(0, 1, 0), (0, 0, 1)])
    assert w_from_weights(span([(1, 1, 0)]), D) == span([(2, -1, 0), (0, 0, 1)])


def test_uniform_weights_tend_to_centroid():
    X = PointConfig.affine([(0, 0), (4, 0), (0, 4), (2, 2)])
    V = hyperplane_at_infinity(2)
    assert _limit_subspace(V, X, [0.25] * 4) == span([(3, 3, 2)])
    W = subspace_from_weights(V, X, WeightVector.uniform(4), Fraction(1, 10**6))
    x, y, z = W.basis[0]
    assert abs(x / z - Fraction(3, 2)) < Fraction(1, 1000) and x == y


def test_weight_vector():
    w = WeightVector.from_float([0.5, 0.25, 0.25, 0.0])
    assert sum(w.weights) == 1 and w.support == frozenset({0, 1, 2})
    with pytest.raises(ValueError):
        WeightVector((Fraction(-1), Fraction(2)))


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(eps_schedule=(1e-2, 1e-1))
    with pytest.raises(ValueError):
        SearchConfig(eps_schedule=(0.0,))


def test_search_square():
    X = PointConfig.affine(SQUARE)
    W, cert = search_center_subspace(hyperplane_at_infinity(2), X, 2)
    assert cert.verdict and verify_center_subspace(cert.V, W, X, 2).verdict


def test_search_median_1d():
    X = PointConfig.affine([(0,), (1,), (2,)])
    W, cert = search_center_subspace(span([(1, 0)]), X, 2)
    assert cert.verdict and W == span([(1, 1)])


def test_search_point_v():
    rng = np.random.default_rng(11)
    X = PointConfig.affine(rng.integers(-9, 10, size=(9, 2)).tolist())
    V = span([(1, 2, 3)])
    W, cert = search_center_subspace(V, X)
    assert cert.verdict and cert.min_count >= 3 and W.rank == 2


def test_search_threads_match_serial():
    X = PointConfig.affine([(0, 0), (5, 1), (2, 6), (7, 7), (1, 3), (4, 4), (6, 2)])
    V = span([(1, 0, 1)])
    a = search_center_subspace(V, X, cfg=SearchConfig(threads=1))[0]
    b = search_center_subspace(V, X, cfg=SearchConfig(threads=3))[0]
    assert a == b
