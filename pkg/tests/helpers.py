"""Shared helpers for the test suite."""

import numpy as np

from dsmkit import (
    barabasi_albert,
    bfs_distances,
    erdos_renyi,
    watts_strogatz,
)


def mixed_random_graphs(count, sizes, seed0=0):
    """A deterministic mix of ER / BA / WS graphs cycling through sizes."""
    graphs = []
    for i in range(count):
        n = sizes[i % len(sizes)]
        fam = i % 3
        if fam == 0:
            graphs.append(erdos_renyi(n, min(8.0 / max(n - 1, 1), 1.0), seed0 + i))
        elif fam == 1:
            graphs.append(barabasi_albert(n, min(3, n - 1), seed0 + i))
        else:
            graphs.append(watts_strogatz(n, 4 if n > 4 else 2, 0.2, seed0 + i))
    return graphs


def is_connected(g):
    if g.n == 0:
        return True
    return bool(np.all(bfs_distances(g, 0) >= 0))
