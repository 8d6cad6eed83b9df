"""Isomorphism, switching isomorphism and sign-symmetry, with checkable witnesses.

The search is individualization-refinement: vertex colors are refined by the
multiset of (edge sign, neighbour color) pairs until stable, then a vertex of
the first non-singleton cell is individualized and the process recurses.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import RootedSignedGraph, SignedGraph, negate, switch
from .spectral import char_poly

DEFAULT_SWITCH_LIMIT = 12


class SearchTooLarge(ValueError):
    """Raised when an exhaustive search would exceed its configured size guard."""


@dataclass(frozen=True)
class IsoWitness:
    """Switch at ``switch_set``, then send vertex ``i`` to ``permutation[i]``."""

    permutation: tuple[int, ...]
    switch_set: tuple[int, ...] = ()

    def apply(self, sigma: SignedGraph) -> SignedGraph:
        return switch(sigma, self.switch_set).relabel(self.permutation)

    def verify(self, first: SignedGraph, second: SignedGraph) -> bool:
        if first.n != second.n or len(self.permutation) != first.n:
            return False
        return self.apply(first) == second

    def to_json(self) -> dict:
        return {"permutation": list(self.permutation), "switch_set": list(self.switch_set)}


def _adjacency_lists(sigma: SignedGraph) -> list[list[tuple[int, int]]]:
    a = sigma.adj
    return [[(u, int(a[v, u])) for u in sigma.neighbors(v)] for v in range(sigma.n)]


def _refine(adjs: Sequence[list[list[tuple[int, int]]]], colorings: list[list[int]]) -> list[list[int]]:
    """Jointly refine colorings of several graphs to a stable partition.

    New colors are ranks of (old color, neighbourhood multiset) signatures, so
    the refined order is isomorphism-invariant and extends the old order.
    """
    colorings = [list(c) for c in colorings]
    n_classes = len({(c) for col in colorings for c in col})
    while True:
        sigs = []
        for adj, col in zip(adjs, colorings):
            sigs.append(
                [(col[v], tuple(sorted((s, col[u]) for u, s in adj[v]))) for v in range(len(col))]
            )
        ranks = {sig: r for r, sig in enumerate(sorted({s for gs in sigs for s in gs}))}
        colorings = [[ranks[s] for s in gs] for gs in sigs]
        new_classes = len(ranks)
        if new_classes == n_classes:
            return colorings
        n_classes = new_classes


def _individualize(col: list[int], v: int) -> list[int]:
    out = [2 * c + 1 for c in col]
    out[v] = 2 * col[v]
    return out


def _target_cell(col: list[int]) -> int | None:
    counts = Counter(col)
    cells = sorted(c for c, k in counts.items() if k > 1)
    return cells[0] if cells else None


def _find_iso(adj1, adj2, g1: SignedGraph, g2: SignedGraph, c1, c2) -> list[int] | None:
    c1, c2 = _refine([adj1, adj2], [c1, c2])
    if Counter(c1) != Counter(c2):
        return None
    cell = _target_cell(c1)
    if cell is None:
        where = {c: v for v, c in enumerate(c2)}
        phi = [where[c] for c in c1]
        a1, a2 = g1.adj, g2.adj
        for u in range(g1.n):
            for v in range(u + 1, g1.n):
                if a1[u, v] != a2[phi[u], phi[v]]:
                    return None
        return phi
    v = c1.index(cell)
    n1 = _individualize(c1, v)
    for w in [w for w, c in enumerate(c2) if c == cell]:
        phi = _find_iso(adj1, adj2, g1, g2, n1, _individualize(c2, w))
        if phi is not None:
            return phi
    return None


def _cheap_invariants(sigma: SignedGraph) -> tuple:
    return (sigma.n, sigma.m, tuple(sorted(sigma.degrees())))


def find_isomorphism(
    first: SignedGraph,
    second: SignedGraph,
    colors1: Sequence[int] | None = None,
    colors2: Sequence[int] | None = None,
) -> list[int] | None:
    """Sign-preserving bijection respecting optional vertex colors, or None."""
    if _cheap_invariants(first) != _cheap_invariants(second):
        return None
    if first.n == 0:
        return []
    c1 = list(colors1) if colors1 is not None else [0] * first.n
    c2 = list(colors2) if colors2 is not None else [0] * second.n
    return _find_iso(_adjacency_lists(first), _adjacency_lists(second), first, second, c1, c2)


def are_isomorphic(first: SignedGraph, second: SignedGraph) -> IsoWitness | None:
    phi = find_isomorphism(first, second)
    if phi is None:
        return None
    witness = IsoWitness(tuple(phi))
    assert witness.verify(first, second), "isomorphism witness failed re-verification"
    return witness


def are_rooted_isomorphic(first: RootedSignedGraph, second: RootedSignedGraph) -> IsoWitness | None:
    """Isomorphism sending root to root."""
    c1 = [1] * first.graph.n
    c1[first.root] = 0
    c2 = [1] * second.graph.n
    c2[second.root] = 0
    phi = find_isomorphism(first.graph, second.graph, c1, c2)
    if phi is None:
        return None
    witness = IsoWitness(tuple(phi))
    assert witness.verify(first.graph, second.graph) and phi[first.root] == second.root
    return witness


def _triangle_profile(sigma: SignedGraph) -> tuple[int, int]:
    signs = [sigma.triangle_sign(*t) for t in sigma.triangles()]
    return (signs.count(1), signs.count(-1))


def switching_invariants(sigma: SignedGraph) -> tuple:
    """Quantities unchanged by switching and relabeling; used only to prune."""
    return _cheap_invariants(sigma) + (_triangle_profile(sigma),)


def are_switching_isomorphic(
    first: SignedGraph,
    second: SignedGraph,
    *,
    limit: int = DEFAULT_SWITCH_LIMIT,
    prune: bool = True,
) -> IsoWitness | None:
    """Search switch sets avoiding vertex 0 (S and its complement act alike)."""
    if first.n != second.n:
        return None
    n = first.n
    if n > limit:
        raise SearchTooLarge(f"switching search on {n} vertices exceeds the limit of {limit}")
    if prune:
        if switching_invariants(first) != switching_invariants(second):
            return None
        if char_poly(first) != char_poly(second):
            return None
    adj2 = _adjacency_lists(second)
    for mask in range(1 << max(n - 1, 0)):
        s = tuple(i + 1 for i in range(n - 1) if mask >> i & 1)
        cand = switch(first, s)
        if _cheap_invariants(cand) != _cheap_invariants(second):
            continue
        phi = _find_iso(_adjacency_lists(cand), adj2, cand, second, [0] * n, [0] * n) if n else []
        if phi is not None:
            witness = IsoWitness(tuple(phi), s)
            assert witness.verify(first, second), "switching witness failed re-verification"
            return witness
    return None


def is_sign_symmetric(sigma: SignedGraph, *, limit: int = DEFAULT_SWITCH_LIMIT) -> IsoWitness | None:
    return are_switching_isomorphic(sigma, negate(sigma), limit=limit)


def is_cospectrally_rooted(first: RootedSignedGraph, second: RootedSignedGraph) -> bool:
    return (
        first.graph.n == second.graph.n
        and char_poly(first.graph) == char_poly(second.graph)
        and char_poly(first.deleted()) == char_poly(second.deleted())
    )


def check_coiso(first: Sequence[RootedSignedGraph], second: Sequence[RootedSignedGraph]) -> bool:
    if len(first) != len(second):
        raise ValueError(f"rooted lists differ in length ({len(first)} vs {len(second)})")
    return all(
        is_cospectrally_rooted(a, b) or are_rooted_isomorphic(a, b) is not None
        for a, b in zip(first, second)
    )


# --- canonical forms -------------------------------------------------------


def _twins(a, u: int, v: int) -> bool:
    row_u, row_v = a[u].copy(), a[v].copy()
    row_u[[u, v]] = 0
    row_v[[u, v]] = 0
    return bool((row_u == row_v).all())


def _canon(adj, sigma: SignedGraph, col: list[int], best):
    col = _refine([adj], [col])[0]
    cell = _target_cell(col)
    if cell is None:
        order = sorted(range(sigma.n), key=col.__getitem__)
        a = sigma.adj
        code = tuple(int(a[order[i], order[j]]) for j in range(len(order)) for i in range(j))
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order
        return
    members = [v for v, c in enumerate(col) if c == cell]
    a = sigma.adj
    if all(_twins(a, members[0], w) for w in members[1:]):
        # the cell's vertices are pairwise swappable, so one branch suffices
        members = members[:1]
    for v in members:
        _canon(adj, sigma, _individualize(col, v), best)


def canonical_form(sigma: SignedGraph, colors: Sequence[int] | None = None) -> tuple[tuple, list[int]]:
    """Isomorphism-invariant code plus the labeling achieving it.

    ``labeling[i]`` is the vertex placed at canonical position ``i``. Graphs
    (with colorings) get equal codes iff they are isomorphic, provided the
    colorings use the same color values for corresponding classes.
    """
    if sigma.n == 0:
        return ((), ()), []
    col = list(colors) if colors is not None else [0] * sigma.n
    best = [None, None]
    _canon(_adjacency_lists(sigma), sigma, col, best)
    order = best[1]
    return (tuple(col[v] for v in order), best[0]), order


def rooted_canonical_form(rooted: RootedSignedGraph) -> tuple:
    col = [1] * rooted.graph.n
    col[rooted.root] = 0
    return canonical_form(rooted.graph, col)[0]


# --- clique restriction ----------------------------------------------------


def maximum_cliques(sigma: SignedGraph) -> list[tuple[int, ...]]:
    """All maximum cliques of the ground graph (Bron-Kerbosch with pivoting)."""
    nbrs = [set(sigma.neighbors(v)) for v in range(sigma.n)]
    found: list[tuple[int, ...]] = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(nbrs[u] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(sigma.n)), set())
    if not found:
        return []
    size = max(len(c) for c in found)
    return sorted(c for c in found if len(c) == size)


@dataclass(frozen=True)
class CliqueRefutation:
    """Outcome of the maximum-clique argument against sign-symmetry.

    ``refuted`` is True only when the ground has a unique maximum clique and the
    signed graph induced on it is not switching isomorphic to its negation; any
    switching isomorphism of the whole graph with its negation would have to
    restrict to one on that clique. Otherwise the check is inconclusive.
    """

    cliques: tuple[tuple[int, ...], ...]
    restricted: SignedGraph | None
    restricted_witness: IsoWitness | None
    refuted: bool


def refute_sign_symmetry_by_clique(
    sigma: SignedGraph, *, limit: int = DEFAULT_SWITCH_LIMIT
) -> CliqueRefutation:
    cliques = tuple(maximum_cliques(sigma))
    if len(cliques) != 1:
        return CliqueRefutation(cliques, None, None, False)
    restricted = sigma.induced(cliques[0])
    witness = is_sign_symmetric(restricted, limit=limit)
    return CliqueRefutation(cliques, restricted, witness, witness is None)
