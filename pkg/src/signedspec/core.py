"""Signed graph data model and elementary constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np


class SignedGraph:
    """A simple signed graph on vertices ``0..n-1``.

    The adjacency matrix is stored as a read-only ``int8`` array with entries in
    {-1, 0, +1} and zero diagonal. Every operation in this package returns a
    new graph; nothing mutates an existing one.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, adj):
        a = np.array(adj, dtype=np.int64, copy=True)
        if a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if not np.isin(a, (-1, 0, 1)).all():
            raise ValueError("adjacency entries must be -1, 0 or +1")
        if np.any(np.diag(a) != 0):
            raise ValueError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a = a.astype(np.int8)
        a.setflags(write=False)
        self._adj = a
        self._hash = None

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    def sign(self, u: int, v: int) -> int:
        return int(self._adj[u, v])

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as ``(u, v, sign)`` with ``u < v``, in lexicographic order."""
        iu, ju = np.nonzero(np.triu(self._adj))
        return [(int(u), int(v), int(self._adj[u, v])) for u, v in zip(iu, ju)]

    @property
    def m(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def negative_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, s in self.edges() if s < 0]

    def ground(self) -> np.ndarray:
        """0/1 adjacency of the underlying unsigned graph."""
        return np.abs(self._adj).astype(np.int8)

    def degrees(self) -> list[int]:
        return [int(d) for d in np.abs(self._adj).sum(axis=1)]

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.nonzero(self._adj[v])[0]]

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.neighbors(v):
                    if color[u] < 0:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def triangles(self) -> list[tuple[int, int, int]]:
        g = self._adj
        out = []
        for u, v, w in combinations(range(self.n), 3):
            if g[u, v] and g[v, w] and g[u, w]:
                out.append((u, v, w))
        return out

    def triangle_sign(self, u: int, v: int, w: int) -> int:
        g = self._adj
        return int(g[u, v]) * int(g[v, w]) * int(g[u, w])

    def relabel(self, perm: Sequence[int]) -> "SignedGraph":
        """Graph whose vertex ``perm[i]`` plays the role of vertex ``i`` here."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        out = np.zeros((self.n, self.n), dtype=np.int64)
        idx = np.array(perm, dtype=np.int64)
        if self.n:
            out[np.ix_(idx, idx)] = self._adj
        return SignedGraph(out)

    def induced(self, vertices: Sequence[int]) -> "SignedGraph":
        vs = list(vertices)
        return SignedGraph(self._adj[np.ix_(vs, vs)] if vs else np.zeros((0, 0)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._adj.shape == other._adj.shape and np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self._adj.tobytes()))
        return self._hash

    def __repr__(self) -> str:
        return f"SignedGraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class RootedSignedGraph:
    graph: SignedGraph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.graph.n:
            raise ValueError(f"root {self.root} outside 0..{self.graph.n - 1}")

    def deleted(self) -> SignedGraph:
        return delete_vertex(self.graph, self.root)


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = np.zeros((n, n), dtype=np.int64)
    for edge in edges:
        if len(edge) != 3:
            raise ValueError(f"edge {edge!r} is not a (u, v, sign) triple")
        u, v, s = (int(x) for x in edge)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if s not in (-1, 1):
            raise ValueError(f"invalid sign {s} on edge ({u}, {v})")
        if adj[u, v] != 0:
            raise ValueError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
        adj[u, v] = adj[v, u] = s
    return SignedGraph(adj)


def all_positive(adj01) -> SignedGraph:
    """The signed graph G^+ on a 0/1 ground adjacency."""
    return SignedGraph(np.abs(np.asarray(adj01, dtype=np.int64)))


def empty_graph(n: int) -> SignedGraph:
    return SignedGraph(np.zeros((n, n), dtype=np.int64))


def complete_graph(n: int, sign: int = 1) -> SignedGraph:
    return SignedGraph(sign * (np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)))


def path_graph(n: int, sign: int = 1) -> SignedGraph:
    return from_edge_list(n, [(i, i + 1, sign) for i in range(n - 1)])


def cycle_graph(n: int, sign: int = 1) -> SignedGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n, sign) for i in range(n)])


def unbalanced_triangle() -> SignedGraph:
    return from_edge_list(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])


def negate(sigma: SignedGraph) -> SignedGraph:
    return SignedGraph(-sigma.adj.astype(np.int64))


def _check_vertices(sigma: SignedGraph, vertices: Iterable[int]) -> list[int]:
    vs = sorted({int(v) for v in vertices})
    for v in vs:
        if not 0 <= v < sigma.n:
            raise ValueError(f"vertex {v} outside 0..{sigma.n - 1}")
    return vs


def switch(sigma: SignedGraph, vertex_set: Iterable[int]) -> SignedGraph:
    """Resign at every vertex of ``vertex_set``.

    An edge changes sign iff exactly one endpoint lies in the set.
    """
    vs = _check_vertices(sigma, vertex_set)
    d = np.ones(sigma.n, dtype=np.int64)
    d[vs] = -1
    return SignedGraph(sigma.adj.astype(np.int64) * np.outer(d, d))


def delete_vertex(sigma: SignedGraph, v: int) -> SignedGraph:
    if sigma.n == 0:
        raise ValueError("cannot delete a vertex from the empty graph")
    if not 0 <= v < sigma.n:
        raise ValueError(f"vertex {v} outside 0..{sigma.n - 1}")
    keep = [i for i in range(sigma.n) if i != v]
    return sigma.induced(keep)


def disjoint_union(first: SignedGraph, second: SignedGraph) -> SignedGraph:
    n1, n2 = first.n, second.n
    adj = np.zeros((n1 + n2, n1 + n2), dtype=np.int64)
    adj[:n1, :n1] = first.adj
    adj[n1:, n1:] = second.adj
    return SignedGraph(adj)


# Figure 1 labels vertices 1..8; these are the red (negative) edges in that labeling.
_SK8_NEGATIVE_1BASED = ((3, 4), (3, 5), (4, 5), (4, 6), (4, 7), (5, 7), (5, 8), (6, 7), (7, 8))


def sk8() -> SignedGraph:
    """Signed K8 with nine negative edges: symmetric spectrum, yet not sign-symmetric."""
    negative = {(u - 1, v - 1) for u, v in _SK8_NEGATIVE_1BASED}
    edges = [(u, v, -1 if (u, v) in negative else 1) for u, v in combinations(range(8), 2)]
    return from_edge_list(8, edges)
