import numpy as np
import pytest

from dsmkit import (
    IndexOutOfRangeError,
    UNREACHABLE,
    all_pairs_distances,
    betweenness,
    bfs_distances,
    build_graph,
)
from dsmkit.algorithms import betweenness_bruteforce
from helpers import mixed_random_graphs


def test_bfs_path():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert list(bfs_distances(g, 0)) == [0, 1, 2, 3]
    assert list(bfs_distances(g, 2)) == [2, 1, 0, 1]


def test_bfs_disconnected():
    g = build_graph(4, [(0, 1), (2, 3)])
    d = bfs_distances(g, 0)
    assert list(d) == [0, 1, UNREACHABLE, UNREACHABLE]


def test_bfs_source_out_of_range(k3):
    with pytest.raises(IndexOutOfRangeError):
        bfs_distances(k3, 3)


def test_all_pairs_symmetric():
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5)])
    d = all_pairs_distances(g)
    assert np.array_equal(d, d.T)
    assert np.all(np.diag(d) == 0)


def test_betweenness_star(star5):
    bc = betweenness(star5)
    assert bc[0] == pytest.approx(1.0)
    assert np.allclose(bc[1:], 0.0)


def test_betweenness_path(p3):
    bc = betweenness(p3)
    assert list(bc) == [0.0, 1.0, 0.0]


def test_betweenness_cycle():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    bc = betweenness(g)
    assert np.allclose(bc, bc[0])


def test_betweenness_tiny_graphs_are_zero(p2):
    assert list(betweenness(p2)) == [0.0, 0.0]


def test_betweenness_matches_bruteforce_small():
    for g in mixed_random_graphs(12, [5, 6, 7, 8], seed0=100):
        fast = betweenness(g)
        slow = betweenness_bruteforce(g)
        assert np.max(np.abs(fast - slow)) <= 1e-12
