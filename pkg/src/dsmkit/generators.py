"""Deterministic synthetic graph generators.

All models draw from numpy's PCG64 generator seeded with the caller's 64-bit
seed, so identical (model, params, seed) triples reproduce identical edge
sets. Supported models: Erdos-Renyi (er), Barabasi-Albert (ba),
Watts-Strogatz (ws), stochastic block model (sbm), and random geometric
graphs on the unit square (rgg).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import InvalidParamsError
from .graph import Graph, build_graph


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n,2) pairs is an edge independently with
    probability p."""
    if n < 0:
        raise InvalidParamsError(f"er: n must be nonnegative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParamsError(f"er: p must be in [0,1], got {p}")
    rng = _rng(seed)
    edges = []
    for i in range(n):
        mask = rng.random(n - i - 1) < p
        for j in np.nonzero(mask)[0]:
            edges.append((i, i + 1 + int(j)))
    return build_graph(n, edges)


def barabasi_albert(n: int, m: int, seed: int) -> Graph:
    """Preferential attachment: seed with a complete graph on m nodes, then
    each new node attaches m edges without replacement, targets weighted by
    current degree."""
    if not 1 <= m < n:
        raise InvalidParamsError(f"ba: need 1 <= m < n, got m={m}, n={n}")
    rng = _rng(seed)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    degree = np.zeros(n, dtype=np.float64)
    degree[:m] = m - 1
    if m == 1:
        # degenerate seed: a single isolated node has degree 0; attach the
        # first newcomer uniformly so the weights are well defined
        degree[0] = 1.0
    for t in range(m, n):
        weights = degree[:t] / degree[:t].sum()
        targets = rng.choice(t, size=m, replace=False, p=weights)
        for j in sorted(int(x) for x in targets):
            edges.append((j, t))
            degree[j] += 1
        degree[t] = m
    return build_graph(n, edges)


def watts_strogatz(n: int, k: int, beta: float, seed: int) -> Graph:
    """Ring lattice with k/2 neighbors on each side; each lattice edge's far
    endpoint is rewired with probability beta, resampling on collisions."""
    if k % 2 != 0 or k < 0:
        raise InvalidParamsError(f"ws: k must be even and nonnegative, got {k}")
    if k >= n:
        raise InvalidParamsError(f"ws: need k < n, got k={k}, n={n}")
    if not 0.0 <= beta <= 1.0:
        raise InvalidParamsError(f"ws: beta must be in [0,1], got {beta}")
    rng = _rng(seed)
    present = set()
    for offset in range(1, k // 2 + 1):
        for i in range(n):
            present.add(tuple(sorted((i, (i + offset) % n))))
    for offset in range(1, k // 2 + 1):
        for i in range(n):
            j = (i + offset) % n
            key = tuple(sorted((i, j)))
            if key not in present:
                continue  # already rewired away by an earlier pass
            if rng.random() < beta:
                for _ in range(100 * n):
                    new_j = int(rng.integers(n))
                    new_key = tuple(sorted((i, new_j)))
                    if new_j != i and new_key not in present:
                        present.discard(key)
                        present.add(new_key)
                        break
    return build_graph(n, sorted(present))


def stochastic_block_model(block_sizes: Sequence[int], p_in: float, p_out: float, seed: int) -> Graph:
    """Two-probability SBM: p_in within a block, p_out across blocks."""
    sizes = [int(s) for s in block_sizes]
    if any(s < 0 for s in sizes) or not sizes:
        raise InvalidParamsError(f"sbm: block sizes must be nonnegative, got {sizes}")
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not 0.0 <= p <= 1.0:
            raise InvalidParamsError(f"sbm: {name} must be in [0,1], got {p}")
    n = sum(sizes)
    block = np.repeat(np.arange(len(sizes)), sizes)
    rng = _rng(seed)
    edges = []
    for i in range(n):
        probs = np.where(block[i + 1:] == block[i], p_in, p_out)
        mask = rng.random(n - i - 1) < probs
        for j in np.nonzero(mask)[0]:
            edges.append((i, i + 1 + int(j)))
    return build_graph(n, edges)


def random_geometric(n: int, radius: float, seed: int) -> Graph:
    """n uniform points on the unit square, connected iff Euclidean distance
    is at most radius."""
    if n < 0:
        raise InvalidParamsError(f"rgg: n must be nonnegative, got {n}")
    if radius <= 0:
        raise InvalidParamsError(f"rgg: radius must be positive, got {radius}")
    rng = _rng(seed)
    pts = rng.random((n, 2))
    edges = []
    for i in range(n):
        d2 = np.sum((pts[i + 1:] - pts[i]) ** 2, axis=1)
        for j in np.nonzero(d2 <= radius * radius)[0]:
            edges.append((i, i + 1 + int(j)))
    return build_graph(n, edges)


def generate_graph(model: str, params: dict, seed: int) -> Graph:
    """Dispatch on model name; params are the model's keyword arguments."""
    model = model.lower()
    if model == "er":
        return erdos_renyi(params["n"], params["p"], seed)
    if model == "ba":
        return barabasi_albert(params["n"], params["m"], seed)
    if model == "ws":
        return watts_strogatz(params["n"], params["k"], params["beta"], seed)
    if model == "sbm":
        return stochastic_block_model(params["block_sizes"], params["p_in"], params["p_out"], seed)
    if model == "rgg":
        return random_geometric(params["n"], params["radius"], seed)
    raise InvalidParamsError(f"unknown model {model!r}")
