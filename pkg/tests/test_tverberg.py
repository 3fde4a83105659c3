import numpy as np
import pytest

from projtverberg.centerpoint import SearchConfig
from projtverberg.geometry import PointConfig, canonicalize, hyperplane_at_infinity, span
from projtverberg.pieces import verify_transversal_witness, verify_tverberg_witness
from projtverberg.tverberg import (TransversalInstance, count_valid_partitions, hulls_intersect,
                                   radon_partition, search_both_subspaces,
                                   search_projective_tverberg, search_transversal,
                                   solve_partition)

V_INF = hyperplane_at_infinity(2)
SQUARE = PointConfig.affine([(1, 1), (-1, 1), (1, -1), (-1, -1)])


def test_radon_square():
    part, point = radon_partition(SQUARE)
    assert part.parts == ((0, 3), (1, 2)) and point == (0, 0)


def test_radon_triangle_plus_interior():
    X = PointConfig.affine([(0, 0), (6, 0), (0, 6), (1, 1)])
    part, point = radon_partition(X)
    assert part.parts == ((0, 1, 2), (3,)) and point == (1, 1)


def test_radon_on_a_line():
    pts = [(0,), (1,), (2,), (3,)]
    part, point = radon_partition(PointConfig.affine(pts))
    A, B = ([pts[i] for i in p] for p in part.parts)
    assert hulls_intersect(A, B) is not None
    with pytest.raises(ValueError):
        radon_partition(PointConfig.affine(pts[:2]))


def test_solver_small():
    # sets {0,1}, {2,3}: each part needs one of each
    part = solve_partition([0b0011, 0b1100], 4, 2)
    assert part is not None and all(len(p) == 2 for p in part.parts)
    assert solve_partition([0b0001], 4, 2) is None
    assert solve_partition([0b0011, 0b1100], 4, 2, count=True) == 2


def test_search_square_matches_radon():
    W, part, cert = search_projective_tverberg(V_INF, SQUARE, 2)
    assert cert.verdict and part.parts == radon_partition(SQUARE)[0].parts


def test_search_r1():
    W, part, cert = search_projective_tverberg(V_INF, SQUARE, 1)
    assert cert.verdict and part.parts == ((0, 1, 2, 3),)


def test_search_point_v_four_points():
    X = PointConfig.affine([(0, 0), (5, 1), (2, 6), (-3, 2)])
    V = span([(1, 1, 3)])
    W, part, cert = search_projective_tverberg(V, X, 2)
    assert W.rank == 2 and part.r == 2
    assert verify_tverberg_witness(V, W, X, part).verdict


def test_search_rainbow():
    X = PointConfig.affine([(0, 0), (4, 0), (0, 4), (4, 4), (2, 1)], colors=[0, 1, 0, 1, 2])
    W, part, cert = search_projective_tverberg(V_INF, X, 2, rainbow=True)
    assert cert is not None and cert.details["rainbow"]
    for p in part.parts:
        assert len({X.colors[i] for i in p}) == len(p)


def test_size_warning_only():
    X = PointConfig.affine([(0, 0), (4, 0), (0, 4), (1, 1), (3, 3)])
    with pytest.warns(UserWarning):
        W, part, cert = search_projective_tverberg(V_INF, X, 2)
    assert cert.verdict and any("(D+1)(r-1)+1" in n for n in cert.details["notes"])


def test_transversal_m2():
    V = hyperplane_at_infinity(3)
    X1 = PointConfig.affine([(0, 0, 0), (4, 0, 0), (0, 4, 0), (1, 1, 3)])
    X2 = PointConfig.affine([(0, 0, 1), (3, 1, 0), (1, 3, 2), (1, 1, -2)])
    inst = TransversalInstance([(X1, 2), (X2, 2)], 3, 2, 1)
    W, parts, cert = search_transversal(inst, V=V)
    assert cert is not None and W.rank == 2
    assert verify_transversal_witness(V, W, list(zip([X1, X2], parts))).verdict
    assert cert.details["gate"].verdict


def test_transversal_m1_delegates():
    inst = TransversalInstance([(SQUARE, 2)], 2, 1, 0)
    W, parts, cert = search_transversal(inst, V=V_INF)
    assert cert.verdict and parts[0].parts == ((0, 3), (1, 2))


def test_both_subspaces():
    rng = np.random.default_rng(5)
    Xs = [PointConfig.affine(rng.integers(-6, 7, size=(4, 2)).tolist()) for _ in range(2)]
    V, W, parts, cert = search_both_subspaces(Xs, 2, 0, [2, 2])
    assert cert is not None and V.rank == 1 and W.rank == 2
    assert cert.details["gate"].verdict


def test_both_subspaces_r1():
    V, W, parts, cert = search_both_subspaces([SQUARE, SQUARE], 2, 0, [1, 1])
    assert cert.verdict


def test_count_valid_partitions():
    W = span([(0, 0, 1)])
    assert count_valid_partitions(V_INF, W, SQUARE, 2) >= 1
    assert count_valid_partitions(V_INF, W, SQUARE, 1) == 1
    assert count_valid_partitions(V_INF, W, SQUARE, 4) == 0


def test_search_config_seed_determinism():
    X = PointConfig.affine([(0, 0), (3, 1), (1, 4), (5, 5), (2, 2), (4, 0), (0, 5)])
    a = search_projective_tverberg(V_INF, X, 3, SearchConfig(seed=4))
    b = search_projective_tverberg(V_INF, X, 3, SearchConfig(seed=4))
    assert a[0] == b[0] and a[1] == b[1]
