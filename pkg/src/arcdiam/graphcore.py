"""Immutable simple graphs in compressed adjacency form, plus the metric
quantities the degree-diameter problem is phrased in."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import Disconnected, IndexOutOfRange, SelfLoop

__all__ = [
    "Graph", "GraphCertificate", "from_edges", "from_neighbor_rows",
    "diameter", "diameter_at_most", "girth", "regularity", "arcs",
    "is_connected", "certify_graph",
]


class Graph:
    """Simple undirected graph; neighbors of ``v`` are
    ``neighbors[offsets[v]:offsets[v + 1]]``, sorted and duplicate-free."""

    def __init__(self, n: int, offsets: np.ndarray, neighbors: np.ndarray,
                 labels: Optional[Sequence[str]] = None):
        self.n = n
        self.offsets = np.asarray(offsets, dtype=np.int64)
        self.neighbors = np.asarray(neighbors, dtype=np.int64)
        self.offsets.setflags(write=False)
        self.neighbors.setflags(write=False)
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("one label per vertex required")

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return len(self.neighbors) // 2

    def degree(self, v: int) -> int:
        return int(self.offsets[v + 1] - self.offsets[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def adj(self, v: int) -> np.ndarray:
        return self.neighbors[self.offsets[v]:self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    @cached_property
    def adj_lists(self) -> List[List[int]]:
        nb = self.neighbors.tolist()
        off = self.offsets.tolist()
        return [nb[off[v]:off[v + 1]] for v in range(self.n)]

    @cached_property
    def adj_masks(self) -> List[int]:
        """Neighborhoods as Python-int bitsets (bit u set iff u ~ v)."""
        if self.n == 0:
            return []
        rows = np.repeat(np.arange(self.n), self.degrees())
        dense = np.zeros((self.n, self.n), dtype=bool)
        dense[rows, self.neighbors] = True
        packed = np.packbits(dense, axis=1, bitorder="little")
        return [int.from_bytes(r.tobytes(), "little") for r in packed]

    @cached_property
    def arc_keys(self) -> np.ndarray:
        """Sorted ``u * n + v`` for every arc; position = arc index."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
        return src * self.n + self.neighbors

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj_lists[u] if u < v]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.offsets, other.offsets)
                and np.array_equal(self.neighbors, other.neighbors))

    __hash__ = None


def from_edges(n: int, edges: Iterable[Tuple[int, int]],
               labels: Optional[Sequence[str]] = None) -> Graph:
    """Canonical graph from an edge list; repeated edges collapse."""
    pairs = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        pairs.add((u, v))
        pairs.add((v, u))
    if pairs:
        arr = np.array(sorted(pairs), dtype=np.int64)
        src, dst = arr[:, 0], arr[:, 1]
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    offsets = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=offsets[1:])
    return Graph(n, offsets, dst, labels)


def from_neighbor_rows(rows: np.ndarray, labels=None) -> Graph:
    """Regular graph from an n x k array of neighbor indices.

    Rows are sorted here; the caller guarantees symmetry, which is checked.
    """
    rows = np.sort(np.asarray(rows, dtype=np.int64), axis=1)
    n, k = rows.shape
    if k and (np.any(rows[:, 1:] == rows[:, :-1])):
        raise ValueError("duplicate neighbor in a row")
    if np.any(rows == np.arange(n)[:, None]):
        raise SelfLoop("self-loop in neighbor rows")
    g = Graph(n, np.arange(n + 1, dtype=np.int64) * k, rows.ravel(), labels)
    src = np.repeat(np.arange(n, dtype=np.int64), k)
    rev = np.sort(g.neighbors * n + src)
    if not np.array_equal(rev, g.arc_keys):
        raise ValueError("neighbor rows are not symmetric")
    return g


def _bfs_levels(masks: List[int], s: int, full: int, stop_after: Optional[int] = None):
    """Eccentricity of ``s`` by bitset BFS, or None if some vertex is
    unreachable.  With ``stop_after`` the search quits once it is exceeded."""
    seen = 1 << s
    frontier = seen
    ecc = 0
    while True:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
        ecc += 1
        if stop_after is not None and ecc > stop_after:
            return ecc
    return ecc if seen == full else None


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _bfs_levels(g.adj_masks, 0, (1 << g.n) - 1) is not None


def diameter(g: Graph) -> int:
    """Maximum BFS eccentricity over all vertices.

    Raises Disconnected rather than returning an infinite value.
    """
    if g.n == 0:
        raise ValueError("empty graph has no diameter")
    masks, full = g.adj_masks, (1 << g.n) - 1
    best = 0
    for s in range(g.n):
        ecc = _bfs_levels(masks, s, full)
        if ecc is None:
            raise Disconnected(f"vertex {s} does not reach every vertex")
        best = max(best, ecc)
    return best


def diameter_at_most(g: Graph, k: int) -> bool:
    """Predicate form of ``diameter(g) <= k`` that stops at the first witness
    of a larger eccentricity."""
    masks, full = g.adj_masks, (1 << g.n) - 1
    for s in range(g.n):
        ecc = _bfs_levels(masks, s, full, stop_after=k)
        if ecc is None or ecc > k:
            return False
    return True


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    masks = g.adj_masks
    adj = g.adj_lists
    for u in range(g.n):
        mu = masks[u]
        for v in adj[u]:
            if v > u and mu & masks[v]:
                return 3
    best = None
    for r in range(g.n):
        dist = {r: 0}
        parent = {r: -1}
        queue = deque([r])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def regularity(g: Graph) -> Tuple[bool, Union[int, Tuple[int, ...]]]:
    """``(True, k)`` for a k-regular graph, else ``(False, degree multiset)``
    with the multiset as a descending tuple."""
    deg = g.degrees()
    if g.n and np.all(deg == deg[0]):
        return True, int(deg[0])
    return False, tuple(sorted((int(x) for x in deg), reverse=True))


def arcs(g: Graph) -> List[Tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in g.adj_lists[u]]


@dataclass(frozen=True)
class GraphCertificate:
    order: int
    is_regular: bool
    degree: Union[int, Tuple[int, ...]]
    diameter: Optional[int]
    girth: Optional[int]
    connected: bool

    def __post_init__(self):
        # a regular diameter-2 graph cannot beat the Moore bound
        if self.is_regular and self.diameter == 2:
            assert self.order <= self.degree ** 2 + 1, "Moore bound violated"


def certify_graph(g: Graph) -> GraphCertificate:
    conn = is_connected(g)
    reg, deg = regularity(g)
    return GraphCertificate(
        order=g.n,
        is_regular=reg,
        degree=deg,
        diameter=diameter(g) if conn else None,
        girth=girth(g),
        connected=conn,
    )
