"""Classical graph algorithms: BFS distances and Brandes betweenness."""

from __future__ import annotations

from collections import deque

import numpy as np

from .errors import IndexOutOfRangeError
from .graph import Graph, UNREACHABLE


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Unweighted shortest-path hop counts from source; UNREACHABLE (-1) for
    nodes in other components."""
    if not 0 <= source < g.n:
        raise IndexOutOfRangeError(source, g.n)
    dist = np.full(g.n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    offsets, cols = g.row_offsets, g.col_indices
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in cols[offsets[u]:offsets[u + 1]]:
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(int(v))
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """n x n hop-count matrix via n BFS runs; UNREACHABLE off-component."""
    return np.stack([bfs_distances(g, s) for s in range(g.n)])


def betweenness(g: Graph) -> np.ndarray:
    """Normalized betweenness centrality via Brandes' accumulation.

    Normalization is 2/((n-1)(n-2)); graphs with n < 3 return all zeros.
    """
    n = g.n
    bc = np.zeros(n, dtype=np.float64)
    if n < 3:
        return bc
    offsets, cols = g.row_offsets, g.col_indices
    for s in range(n):
        stack = []
        preds = [[] for _ in range(n)]
        sigma = np.zeros(n, dtype=np.float64)
        sigma[s] = 1.0
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in cols[offsets[v]:offsets[v + 1]]:
                w = int(w)
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = np.zeros(n, dtype=np.float64)
        while stack:
            w = stack.pop()
            for v in preds[w]:
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w])
            if w != s:
                bc[w] += delta[w]
    # each unordered pair was counted from both endpoints
    bc /= 2.0
    bc *= 2.0 / ((n - 1) * (n - 2))
    return bc


def betweenness_bruteforce(g: Graph) -> np.ndarray:
    """Exhaustive shortest-path enumeration oracle; only sensible for tiny n.

    Counts, for every ordered intermediate (s, t) pair, the fraction of
    shortest s-t paths through each interior node, then applies the same
    normalization as betweenness().
    """
    n = g.n
    bc = np.zeros(n, dtype=np.float64)
    if n < 3:
        return bc

    def all_shortest_paths(s: int, t: int):
        dist = bfs_distances(g, s)
        if dist[t] == UNREACHABLE:
            return []
        paths = []

        def extend(path):
            u = path[-1]
            if u == t:
                paths.append(list(path))
                return
            for v in g.neighbors(u):
                v = int(v)
                if dist[v] == dist[u] + 1 and dist[v] <= dist[t]:
                    path.append(v)
                    extend(path)
                    path.pop()

        extend([s])
        return paths

    for s in range(n):
        for t in range(s + 1, n):
            paths = all_shortest_paths(s, t)
            if not paths:
                continue
            for path in paths:
                for v in path[1:-1]:
                    bc[v] += 1.0 / len(paths)
    bc *= 2.0 / ((n - 1) * (n - 2))
    return bc
