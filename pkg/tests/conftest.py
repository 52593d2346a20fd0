import pytest

from dsmkit import build_graph


@pytest.fixture
def k3():
    """Triangle."""
    return build_graph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def p2():
    """Single edge."""
    return build_graph(2, [(0, 1)])


@pytest.fixture
def p3():
    """Path on three nodes."""
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def star5():
    """Star with four leaves."""
    return build_graph(5, [(0, i) for i in range(1, 5)])
