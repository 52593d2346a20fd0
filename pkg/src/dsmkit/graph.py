"""Immutable CSR graph representation and edge-list file I/O.

Graphs are simple and undirected: every edge is stored in both directions,
column indices are sorted within each row, and self-loops / duplicate edges
are rejected at construction time.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .errors import (
    DuplicateEdgeError,
    GraphConstructionError,
    IndexOutOfRangeError,
    SelfLoopError,
)

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph in compressed sparse row form."""

    n: int
    row_offsets: np.ndarray  # int64, length n+1
    col_indices: np.ndarray  # int64, length 2|E|

    def __post_init__(self):
        object.__setattr__(self, "row_offsets", np.ascontiguousarray(self.row_offsets, dtype=np.int64))
        object.__setattr__(self, "col_indices", np.ascontiguousarray(self.col_indices, dtype=np.int64))
        self.row_offsets.setflags(write=False)
        self.col_indices.setflags(write=False)

    @property
    def num_edges(self) -> int:
        return self.col_indices.shape[0] // 2

    def neighbors(self, u: int) -> np.ndarray:
        return self.col_indices[self.row_offsets[u]:self.row_offsets[u + 1]]

    def degrees(self) -> np.ndarray:
        """Degree vector d with d[i] = neighbor count of node i."""
        return np.diff(self.row_offsets)

    def edges(self) -> Iterable[Tuple[int, int]]:
        """Yield each undirected edge once, as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)


def build_graph(n: int, edges: Sequence[Tuple[int, int]]) -> Graph:
    """Build a canonical CSR graph from an unordered edge list.

    Each pair may appear at most once in either orientation; repeats raise
    DuplicateEdgeError and self-loops raise SelfLoopError.
    """
    if n < 0:
        raise GraphConstructionError(f"negative node count {n}")
    seen = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n):
            raise IndexOutOfRangeError(u, n)
        if not (0 <= v < n):
            raise IndexOutOfRangeError(v, n)
        if u == v:
            raise SelfLoopError(u)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(u, v)
        seen.add(key)

    if not seen:
        return Graph(n, np.zeros(n + 1, dtype=np.int64), np.zeros(0, dtype=np.int64))

    pairs = np.array(sorted(seen), dtype=np.int64)
    src = np.concatenate([pairs[:, 0], pairs[:, 1]])
    dst = np.concatenate([pairs[:, 1], pairs[:, 0]])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    row_offsets = np.zeros(n + 1, dtype=np.int64)
    np.add.at(row_offsets, src + 1, 1)
    row_offsets = np.cumsum(row_offsets)
    return Graph(n, row_offsets, dst)


def degrees(g: Graph) -> np.ndarray:
    return g.degrees()


def write_edgelist(g: Graph, path: str) -> None:
    """Write the edge-list text format: header "n <count>", then "u v" lines."""
    lines = [f"n {g.n}\n"]
    lines.extend(f"{u} {v}\n" for u, v in g.edges())
    atomic_write_text(path, "".join(lines))


def read_edgelist(path: str) -> Graph:
    """Parse the edge-list text format produced by write_edgelist.

    Lines starting with '#' are ignored; the first non-comment line must be
    "n <count>".
    """
    n = None
    edges = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if n is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "n":
                    raise GraphConstructionError(f"bad header line: {line!r}")
                n = int(parts[1])
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphConstructionError(f"bad edge line: {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise GraphConstructionError("missing 'n <count>' header")
    return build_graph(n, edges)


def atomic_write_text(path: str, text: str) -> None:
    """Write text to path via a temp file + rename so readers never see a
    partially written file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
