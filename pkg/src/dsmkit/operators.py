"""Diffusion operators built on the inverse modified Laplacian.

The exact operator is B = (I + L)^{-1}, which is symmetric and doubly
stochastic. Its truncated series approximation B_K = sum_{k=0..K} P^k Dt^{-1}
(with Dt = I + D and P = Dt^{-1} A) is exact inside a K-hop receptive field
and structurally zero outside it. The compensated variant adds the leaked
row mass P^{K+1} 1 back onto the diagonal, restoring exact row sums of 1.

Dense n x n materializations are gated behind a configurable oracle cap; the
propagate() path is streaming and only ever does sparse matrix products.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from .errors import DimensionMismatchError, DsmError, OracleCapExceededError
from .graph import Graph

DEFAULT_ORACLE_CAP = 2000


def oracle_cap(override: int | None = None) -> int:
    """Dense-path node cap; DSM_ORACLE_CAP in the environment overrides the
    default, an explicit argument overrides both."""
    if override is not None:
        return int(override)
    env = os.environ.get("DSM_ORACLE_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_ORACLE_CAP


def _check_cap(n: int, cap: int | None) -> None:
    limit = oracle_cap(cap)
    if n > limit:
        raise OracleCapExceededError(n, limit)


def adjacency_csr(g: Graph) -> sp.csr_matrix:
    """Unweighted adjacency as a scipy CSR matrix sharing the graph's arrays."""
    data = np.ones(g.col_indices.shape[0], dtype=np.float64)
    return sp.csr_matrix((data, g.col_indices, g.row_offsets), shape=(g.n, g.n))


@dataclass(frozen=True)
class TransitionOperator:
    """Matrix-free random-walk operator P = (I + D)^{-1} A."""

    graph: Graph
    adjacency: sp.csr_matrix
    inv_aug_degree: np.ndarray  # 1 / (d_i + 1)

    @classmethod
    def from_graph(cls, g: Graph) -> "TransitionOperator":
        inv = 1.0 / (g.degrees().astype(np.float64) + 1.0)
        return cls(g, adjacency_csr(g), inv)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """y = P x for a vector or n x f matrix, in O(|E| f)."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape[0] != self.graph.n:
            raise DimensionMismatchError(
                f"features have {x.shape[0]} rows, graph has {self.graph.n} nodes")
        y = self.adjacency @ x
        if y.ndim == 1:
            return y * self.inv_aug_degree
        return y * self.inv_aug_degree[:, None]


def transition_apply(t: TransitionOperator, x: np.ndarray) -> np.ndarray:
    return t.apply(x)


def modified_laplacian_dense(g: Graph) -> np.ndarray:
    """I + L = I + D - A as a dense array."""
    a = adjacency_csr(g).toarray()
    lt = -a
    np.fill_diagonal(lt, g.degrees() + 1.0)
    return lt


def exact_dsm(g: Graph, cap: int | None = None) -> np.ndarray:
    """Exact B = (I + L)^{-1} via a Cholesky solve (I + L is SPD).

    Raises OracleCapExceededError above the dense cap. The returned matrix
    satisfies ||(I+L) B - I||_inf <= 1e-10 and has unit row and column sums.
    """
    _check_cap(g.n, cap)
    if g.n == 0:
        return np.zeros((0, 0))
    lt = modified_laplacian_dense(g)
    c, low = scipy.linalg.cho_factor(lt)
    b = scipy.linalg.cho_solve((c, low), np.eye(g.n))
    # cheap residual check: (I+L)B = (D+I) B - A B, never re-densifying L
    a = adjacency_csr(g)
    resid = b * (g.degrees() + 1.0)[:, None] - a @ b
    resid[np.diag_indices(g.n)] -= 1.0
    worst = np.max(np.sum(np.abs(resid), axis=1))
    if worst > 1e-10:
        raise DsmError(f"inverse residual {worst:.3e} above 1e-10")
    return b


def truncated_dsm(g: Graph, K: int, cap: int | None = None) -> np.ndarray:
    """B_K = sum_{k=0..K} P^k Dt^{-1}, materialized by K sparse-times-dense
    passes so entries beyond K hops stay exact zeros."""
    _check_cap(g.n, cap)
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    t = TransitionOperator.from_graph(g)
    term = np.diag(t.inv_aug_degree)  # k = 0 term Dt^{-1}
    acc = term.copy()
    for _ in range(K):
        term = t.apply(term)
        acc += term
    return acc


def residual_mass(g: Graph, K: int) -> np.ndarray:
    """m = P^{K+1} 1, the row-sum deficit of B_K, in O(K |E|)."""
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    t = TransitionOperator.from_graph(g)
    m = np.ones(g.n, dtype=np.float64)
    for _ in range(K + 1):
        m = t.apply(m)
    return m


def compensated_dsm(g: Graph, K: int, cap: int | None = None) -> np.ndarray:
    """B_K with the residual mass folded back onto the diagonal; rows sum to
    exactly 1 up to roundoff."""
    b = truncated_dsm(g, K, cap=cap)
    b[np.diag_indices(g.n)] += residual_mass(g, K)
    return b


def propagate(g: Graph, K: int, z0: np.ndarray, mode: str = "truncated") -> np.ndarray:
    """Streaming application of B_K (mode="truncated") or B-hat_K
    (mode="compensated") to an n x f feature matrix in O(K |E| f).

    Uses the synchronous recurrences S0 = Dt^{-1} z0, S_k = P S_{k-1} + S0
    and, for the compensated mode, m_k = P m_{k-1} with the final
    diag(m_{K+1}) z0 correction. No n x n matrix is ever formed.
    """
    if mode not in ("truncated", "compensated"):
        raise ValueError(f"unknown propagate mode {mode!r}")
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    z0 = np.asarray(z0, dtype=np.float64)
    if z0.shape[0] != g.n:
        raise DimensionMismatchError(
            f"features have {z0.shape[0]} rows, graph has {g.n} nodes")
    t = TransitionOperator.from_graph(g)
    if z0.ndim == 1:
        s0 = z0 * t.inv_aug_degree
    else:
        s0 = z0 * t.inv_aug_degree[:, None]
    s = s0.copy()
    for _ in range(K):
        s = t.apply(s) + s0
    if mode == "compensated":
        m = np.ones(g.n, dtype=np.float64)
        for _ in range(K + 1):
            m = t.apply(m)
        if z0.ndim == 1:
            s = s + m * z0
        else:
            s = s + m[:, None] * z0
    return s


def error_bound(d_max: int, K: int) -> float:
    """Worst-case infinity-norm truncation error (d_max/(d_max+1))^{K+1}."""
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    return (d_max / (d_max + 1.0)) ** (K + 1)
