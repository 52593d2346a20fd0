import numpy as np
import pytest

from dsmkit import (
    InvalidParamsError,
    barabasi_albert,
    erdos_renyi,
    generate_graph,
    random_geometric,
    stochastic_block_model,
    watts_strogatz,
)


@pytest.mark.parametrize("make", [
    lambda s: erdos_renyi(40, 0.15, s),
    lambda s: barabasi_albert(40, 3, s),
    lambda s: watts_strogatz(40, 4, 0.3, s),
    lambda s: stochastic_block_model([20, 20], 0.3, 0.05, s),
    lambda s: random_geometric(40, 0.3, s),
])
def test_same_seed_reproduces(make):
    a, b = make(7), make(7)
    assert np.array_equal(a.row_offsets, b.row_offsets)
    assert np.array_equal(a.col_indices, b.col_indices)


def test_different_seeds_differ():
    a = erdos_renyi(50, 0.2, 1)
    b = erdos_renyi(50, 0.2, 2)
    assert not (np.array_equal(a.row_offsets, b.row_offsets)
                and np.array_equal(a.col_indices, b.col_indices))


def test_er_extreme_probabilities():
    assert erdos_renyi(10, 1.0, 0).num_edges == 45
    assert erdos_renyi(10, 0.0, 0).num_edges == 0


def test_ba_edge_count():
    # complete seed on m nodes plus m edges per newcomer
    g = barabasi_albert(5, 2, 0)
    assert g.num_edges == 7
    g = barabasi_albert(30, 3, 1)
    assert g.num_edges == 3 + 27 * 3
    assert np.all(g.degrees() >= 3 - 1)


def test_ba_m_one_chain_of_attachments():
    g = barabasi_albert(10, 1, 0)
    assert g.num_edges == 9
    # m=1 trees are connected
    from helpers import is_connected
    assert is_connected(g)


def test_ws_zero_beta_is_ring_lattice():
    g = watts_strogatz(10, 4, 0.0, 0)
    assert g.num_edges == 20
    assert np.all(g.degrees() == 4)
    assert set(map(int, g.neighbors(0))) == {1, 2, 8, 9}


def test_ws_rewired_keeps_edge_count():
    g = watts_strogatz(30, 4, 1.0, 3)
    assert g.num_edges == 60


def test_sbm_extreme_probabilities():
    g = stochastic_block_model([4, 5], 1.0, 0.0, 0)
    assert g.num_edges == 6 + 10
    block0 = set(range(4))
    for u, v in g.edges():
        assert (u in block0) == (v in block0)


def test_rgg_large_radius_is_complete():
    g = random_geometric(12, 1.5, 0)
    assert g.num_edges == 66


@pytest.mark.parametrize("bad", [
    lambda: erdos_renyi(10, 1.5, 0),
    lambda: erdos_renyi(-1, 0.5, 0),
    lambda: barabasi_albert(5, 0, 0),
    lambda: barabasi_albert(5, 5, 0),
    lambda: watts_strogatz(10, 3, 0.1, 0),
    lambda: watts_strogatz(10, 10, 0.1, 0),
    lambda: watts_strogatz(10, 4, -0.1, 0),
    lambda: stochastic_block_model([5, -1], 0.5, 0.1, 0),
    lambda: stochastic_block_model([5, 5], 2.0, 0.1, 0),
    lambda: random_geometric(10, 0.0, 0),
    lambda: generate_graph("grid", {}, 0),
])
def test_invalid_params_raise(bad):
    with pytest.raises(InvalidParamsError):
        bad()


def test_generate_graph_dispatch():
    g = generate_graph("ba", {"n": 5, "m": 2}, 0)
    assert g.num_edges == 7
    direct = barabasi_albert(5, 2, 0)
    assert np.array_equal(g.col_indices, direct.col_indices)
    g = generate_graph("sbm", {"block_sizes": [3, 3], "p_in": 1.0, "p_out": 0.0}, 0)
    assert g.num_edges == 6
