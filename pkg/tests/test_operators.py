import numpy as np
import pytest

from dsmkit import (
    DimensionMismatchError,
    OracleCapExceededError,
    TransitionOperator,
    build_graph,
    compensated_dsm,
    erdos_renyi,
    error_bound,
    exact_dsm,
    oracle_cap,
    propagate,
    residual_mass,
    transition_apply,
    truncated_dsm,
)
from dsmkit.operators import DEFAULT_ORACLE_CAP
from helpers import mixed_random_graphs


def test_exact_dsm_triangle(k3):
    b = exact_dsm(k3)
    expected = np.full((3, 3), 0.25)
    np.fill_diagonal(expected, 0.5)
    assert np.allclose(b, expected, atol=1e-12)


def test_exact_dsm_edge(p2):
    b = exact_dsm(p2)
    assert np.allclose(b, np.array([[2, 1], [1, 2]]) / 3.0, atol=1e-12)


def test_exact_dsm_path(p3):
    b = exact_dsm(p3)
    expected = np.array([[5, 2, 1], [2, 4, 2], [1, 2, 5]]) / 8.0
    assert np.allclose(b, expected, atol=1e-12)


def test_exact_dsm_doubly_stochastic_and_symmetric():
    for g in mixed_random_graphs(6, [30, 60], seed0=5):
        b = exact_dsm(g)
        assert np.allclose(b.sum(axis=0), 1.0, atol=1e-10)
        assert np.allclose(b.sum(axis=1), 1.0, atol=1e-10)
        assert np.max(np.abs(b - b.T)) <= 1e-12


def test_truncated_triangle_k1(k3):
    bk = truncated_dsm(k3, 1)
    expected = np.full((3, 3), 1.0 / 9.0)
    np.fill_diagonal(expected, 1.0 / 3.0)
    assert np.allclose(bk, expected, atol=1e-15)


def test_truncated_is_symmetric():
    for g in mixed_random_graphs(4, [40], seed0=9):
        for k in (0, 3, 7):
            bk = truncated_dsm(g, k)
            assert np.max(np.abs(bk - bk.T)) <= 1e-13


def test_truncated_structural_zeros_are_exact():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    bk = truncated_dsm(g, 1)
    # distance-2+ pairs carry an exact floating-point zero, not a small value
    assert bk[0, 2] == 0.0
    assert bk[0, 3] == 0.0
    assert bk[0, 4] == 0.0
    assert bk[4, 1] == 0.0


def test_residual_mass_triangle(k3):
    assert np.allclose(residual_mass(k3, 1), 4.0 / 9.0, atol=1e-15)


def test_residual_mass_isolated_node_is_zero():
    g = build_graph(3, [(0, 1)])
    m = residual_mass(g, 0)
    assert m[2] == 0.0


def test_compensated_triangle_k0_is_identity(k3):
    assert np.allclose(compensated_dsm(k3, 0), np.eye(3), atol=1e-15)


def test_compensated_edge_k1(p2):
    expected = np.array([[3, 1], [1, 3]]) / 4.0
    assert np.allclose(compensated_dsm(p2, 1), expected, atol=1e-15)


def test_compensated_row_sums_exact():
    for g in mixed_random_graphs(4, [50], seed0=20):
        for k in (0, 2, 5, 12):
            bh = compensated_dsm(g, k)
            assert np.max(np.abs(bh.sum(axis=1) - 1.0)) <= 1e-12


def test_transition_operator_matches_dense():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = TransitionOperator.from_graph(g)
    rng = np.random.Generator(np.random.PCG64(0))
    x = rng.standard_normal(4)
    d = g.degrees().astype(float)
    a = np.zeros((4, 4))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    p = a / (d + 1.0)[:, None]
    assert np.allclose(t.apply(x), p @ x, atol=1e-14)
    assert np.allclose(transition_apply(t, x), p @ x, atol=1e-14)


def test_propagate_matches_materialized(k3):
    rng = np.random.Generator(np.random.PCG64(1))
    z = rng.standard_normal((3, 4))
    for k in (0, 1, 2, 5):
        assert np.allclose(propagate(k3, k, z, mode="truncated"),
                           truncated_dsm(k3, k) @ z, atol=1e-12)
        assert np.allclose(propagate(k3, k, z, mode="compensated"),
                           compensated_dsm(k3, k) @ z, atol=1e-12)


def test_propagate_vector_input(p3):
    z = np.array([1.0, 0.0, -1.0])
    out = propagate(p3, 2, z, mode="compensated")
    assert out.shape == (3,)
    assert np.allclose(out, compensated_dsm(p3, 2) @ z, atol=1e-12)


def test_propagate_invalid_mode(k3):
    with pytest.raises(ValueError):
        propagate(k3, 1, np.zeros(3), mode="exact")


def test_propagate_dimension_mismatch(k3):
    with pytest.raises(DimensionMismatchError):
        propagate(k3, 1, np.zeros(4))


@pytest.mark.parametrize("fn", [
    lambda g: truncated_dsm(g, -1),
    lambda g: residual_mass(g, -1),
    lambda g: propagate(g, -1, np.zeros(3)),
])
def test_negative_k_rejected(fn, k3):
    with pytest.raises(ValueError):
        fn(k3)


def test_error_bound_values():
    assert error_bound(2, 3) == pytest.approx(16.0 / 81.0, abs=1e-15)
    assert error_bound(0, 5) == 0.0
    with pytest.raises(ValueError):
        error_bound(-1, 0)
    with pytest.raises(ValueError):
        error_bound(2, -1)


def test_oracle_cap_resolution(monkeypatch):
    monkeypatch.delenv("DSM_ORACLE_CAP", raising=False)
    assert oracle_cap() == DEFAULT_ORACLE_CAP
    monkeypatch.setenv("DSM_ORACLE_CAP", "123")
    assert oracle_cap() == 123
    assert oracle_cap(77) == 77  # explicit argument wins over the env


def test_oracle_cap_enforced():
    g = erdos_renyi(30, 0.2, 0)
    with pytest.raises(OracleCapExceededError):
        exact_dsm(g, cap=10)
    with pytest.raises(OracleCapExceededError):
        truncated_dsm(g, 2, cap=10)
    # streaming path is exempt from the cap
    propagate(g, 2, np.zeros(30))


def test_empty_graph_operators():
    g = build_graph(0, [])
    assert exact_dsm(g).shape == (0, 0)
    assert truncated_dsm(g, 3).shape == (0, 0)
    assert residual_mass(g, 3).shape == (0,)
