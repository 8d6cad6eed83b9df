"""Desk-scale enumeration: cospectrally rooted pairs, signature hunts, and
cospectral signed graphs built from rooted products."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import RootedSignedGraph, SignedGraph, all_positive
from .iso import (
    DEFAULT_SWITCH_LIMIT,
    SearchTooLarge,
    are_switching_isomorphic,
    canonical_form,
    check_coiso,
    is_cospectrally_rooted,
    is_sign_symmetric,
    rooted_canonical_form,
)
from .poly import IntPolynomial
from .products import rooted_product
from .sgfile import write_sg
from .spectral import char_poly, has_symmetric_spectrum

DEFAULT_GRAPH_LIMIT = 8
DEFAULT_EDGE_LIMIT = 20


@dataclass(frozen=True)
class RootedSpectralKey:
    whole_poly: IntPolynomial
    deleted_poly: IntPolynomial

    def __post_init__(self):
        if self.whole_poly.degree != self.deleted_poly.degree + 1:
            raise ValueError("root deletion must drop the degree by exactly one")

    @classmethod
    def of(cls, rooted: RootedSignedGraph) -> "RootedSpectralKey":
        return cls(char_poly(rooted.graph), char_poly(rooted.deleted()))

    def to_json(self) -> dict:
        return {"whole": self.whole_poly.to_list(), "deleted": self.deleted_poly.to_list()}


@dataclass(frozen=True)
class CospectralRootedPair:
    first: RootedSignedGraph
    second: RootedSignedGraph
    key: RootedSpectralKey
    # True when the two members share the same unrooted graph up to isomorphism
    same_ground: bool


def enumerate_graphs(n: int, *, limit: int = DEFAULT_GRAPH_LIMIT) -> list[SignedGraph]:
    """All simple graphs on ``n`` vertices up to isomorphism, as all-positive signed graphs.

    Built by vertex augmentation: every graph on k vertices arises from one on
    k - 1 vertices plus a new vertex with some neighbourhood, so extending each
    class representative by every neighbourhood and deduplicating by canonical
    form is exhaustive. Output order is deterministic (edge count, then code).
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n > limit:
        raise SearchTooLarge(f"graph enumeration on {n} vertices exceeds the limit of {limit}")
    if n == 0:
        return [SignedGraph(np.zeros((0, 0)))]
    level = {canonical_form(SignedGraph(np.zeros((1, 1))))[0]: SignedGraph(np.zeros((1, 1)))}
    for k in range(2, n + 1):
        nxt: dict = {}
        for g in level.values():
            base = np.zeros((k, k), dtype=np.int64)
            base[: k - 1, : k - 1] = g.adj
            for mask in range(1 << (k - 1)):
                adj = base.copy()
                for i in range(k - 1):
                    if mask >> i & 1:
                        adj[i, k - 1] = adj[k - 1, i] = 1
                h = SignedGraph(adj)
                code = canonical_form(h)[0]
                if code not in nxt:
                    nxt[code] = h
        level = nxt
    items = sorted(level.items(), key=lambda kv: (kv[1].m, kv[0]))
    return [g for _, g in items]


def rooted_graphs(n: int, *, limit: int = DEFAULT_GRAPH_LIMIT) -> list[tuple[int, RootedSignedGraph]]:
    """All rooted graphs on ``n`` vertices up to root-preserving isomorphism.

    Each entry carries the index of its unrooted graph in ``enumerate_graphs(n)``.
    """
    out = []
    for gi, g in enumerate(enumerate_graphs(n, limit=limit)):
        seen = set()
        for u in range(g.n):
            rooted = RootedSignedGraph(g, u)
            code = rooted_canonical_form(rooted)
            if code not in seen:
                seen.add(code)
                out.append((gi, rooted))
    return out


def find_cospectrally_rooted_pairs(
    n: int, *, limit: int = DEFAULT_GRAPH_LIMIT
) -> list[CospectralRootedPair]:
    """Pairs of non-isomorphic rooted graphs on ``n`` vertices that are cospectral
    and stay cospectral after deleting their roots."""
    if n > limit:
        raise SearchTooLarge(f"rooted search on {n} vertices exceeds the limit of {limit}")
    if n < 1:
        return []
    buckets: dict[RootedSpectralKey, list[tuple[int, RootedSignedGraph]]] = {}
    for gi, rooted in rooted_graphs(n, limit=limit):
        buckets.setdefault(RootedSpectralKey.of(rooted), []).append((gi, rooted))
    pairs = []
    for key, members in buckets.items():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                (ga, ra), (gb, rb) = members[a], members[b]
                pairs.append(CospectralRootedPair(ra, rb, key, ga == gb))
    return pairs


# --- signature enumeration ---------------------------------------------------


def symmetric_not_sign_symmetric(sigma: SignedGraph, *, limit: int = DEFAULT_SWITCH_LIMIT) -> bool:
    """Symmetric spectrum, non-bipartite ground, and not switching isomorphic to its negation."""
    return (
        has_symmetric_spectrum(sigma)
        and not sigma.is_bipartite()
        and is_sign_symmetric(sigma, limit=limit) is None
    )


PREDICATES: dict[str, Callable[[SignedGraph], bool]] = {
    "symmetric": has_symmetric_spectrum,
    "symmetric-not-sign-symmetric": symmetric_not_sign_symmetric,
}


def _signed_on(ground: SignedGraph, edges: Sequence[tuple[int, int]], mask: int) -> SignedGraph:
    adj = np.zeros((ground.n, ground.n), dtype=np.int64)
    for i, (u, v) in enumerate(edges):
        s = -1 if mask >> i & 1 else 1
        adj[u, v] = adj[v, u] = s
    return SignedGraph(adj)


def enumerate_signatures(
    ground: SignedGraph,
    predicate: Callable[[SignedGraph], bool],
    *,
    limit: int = DEFAULT_EDGE_LIMIT,
    samples: int | None = None,
    seed: int | None = None,
    extra: Iterable[SignedGraph] = (),
    dedupe: bool = True,
    switch_limit: int = DEFAULT_SWITCH_LIMIT,
) -> list[SignedGraph]:
    """Signed graphs on ``ground`` (its signs are ignored) satisfying ``predicate``.

    Full mode walks all 2^m sign assignments; it refuses grounds with more than
    ``limit`` edges. Sampling mode (``samples`` given) draws that many random
    assignments from a generator seeded with ``seed``, after first trying the
    graphs in ``extra``. With ``dedupe`` one representative per switching
    isomorphism class is kept (only for grounds within ``switch_limit``
    vertices; larger grounds dedupe by identical signature).
    """
    edges = [(u, v) for u, v, _ in ground.edges()]
    ground_pattern = ground.ground()
    m = len(edges)
    if samples is None:
        if m > limit:
            raise SearchTooLarge(
                f"ground has {m} edges, more than the limit of {limit}; "
                "use sampling mode (samples and seed)"
            )
        candidates: Iterable[SignedGraph] = (_signed_on(ground, edges, mask) for mask in range(1 << m))
    else:
        if seed is None:
            raise ValueError("sampling mode needs an explicit seed")
        rng = np.random.default_rng(seed)

        def draw():
            yield from extra
            for _ in range(samples):
                bits = rng.integers(0, 2, size=m)
                yield _signed_on(ground, edges, sum(int(b) << i for i, b in enumerate(bits)))

        candidates = draw()

    use_switching = dedupe and ground.n <= switch_limit
    classes: dict[IntPolynomial, list[SignedGraph]] = {}
    seen: set[SignedGraph] = set()
    hits = []
    for sigma in candidates:
        if not np.array_equal(sigma.ground(), ground_pattern):
            raise ValueError("extra graph does not live on the given ground")
        if dedupe:
            if sigma in seen:
                continue
            seen.add(sigma)
            if use_switching:
                bucket = classes.setdefault(char_poly(sigma), [])
                if any(
                    are_switching_isomorphic(rep, sigma, limit=switch_limit) is not None
                    for rep in bucket
                ):
                    continue
                bucket.append(sigma)
        if predicate(sigma):
            hits.append(sigma)
    return hits


# --- cospectral constructions ----------------------------------------------


def _positive(rooted: RootedSignedGraph) -> RootedSignedGraph:
    return RootedSignedGraph(all_positive(rooted.graph.ground()), rooted.root)


def build_cospectral_pair(
    sigma: SignedGraph, pair: tuple[RootedSignedGraph, RootedSignedGraph] | CospectralRootedPair
) -> tuple[SignedGraph, SignedGraph]:
    """Attach all-positive copies of each member of a cospectrally rooted pair at
    every vertex of ``sigma``; the two results are cospectral."""
    if isinstance(pair, CospectralRootedPair):
        first, second = pair.first, pair.second
    else:
        first, second = pair
    first, second = _positive(first), _positive(second)
    if not is_cospectrally_rooted(first, second):
        raise ValueError("rooted graphs are not cospectrally rooted")
    return (
        rooted_product(sigma, [first] * sigma.n),
        rooted_product(sigma, [second] * sigma.n),
    )


def build_coiso_pair(
    sigma: SignedGraph,
    first: Sequence[RootedSignedGraph],
    second: Sequence[RootedSignedGraph],
) -> tuple[SignedGraph, SignedGraph]:
    """Rooted products by two lists that are indexwise cospectrally rooted or isomorphic."""
    if not check_coiso(first, second):
        raise ValueError("rooted lists violate the coiso condition")
    return rooted_product(sigma, list(first)), rooted_product(sigma, list(second))


def write_pair_results(outdir: str | Path, pairs: Sequence[CospectralRootedPair]) -> Path:
    """Write each pair as two ``.sg`` files plus an ``index.json``; returns the index path."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    entries = []
    for pid, pair in enumerate(pairs):
        files = {}
        for tag, rooted in (("a", pair.first), ("b", pair.second)):
            name = f"pair{pid:04d}_{tag}.sg"
            write_sg(outdir / name, rooted.graph, comment=f"root {rooted.root}")
            files[tag] = {"file": name, "root": rooted.root}
        entries.append(
            {
                "pair_id": pid,
                "key_polynomials": pair.key.to_json(),
                "same_ground": pair.same_ground,
                "first": files["a"],
                "second": files["b"],
            }
        )
    index = {
        "pair_ids": [e["pair_id"] for e in entries],
        "key_polynomials": {str(e["pair_id"]): e["key_polynomials"] for e in entries},
        "pairs": entries,
    }
    path = outdir / "index.json"
    path.write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
    return path


def write_graphs(outdir: str | Path, graphs: Sequence[SignedGraph], prefix: str = "hit") -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    entries = []
    for i, g in enumerate(graphs):
        name = f"{prefix}{i:04d}.sg"
        write_sg(outdir / name, g)
        entries.append({"id": i, "file": name, "char_poly": char_poly(g).to_list()})
    path = outdir / "index.json"
    path.write_text(json.dumps({"graphs": entries}, indent=2) + "\n", encoding="utf-8")
    return path


__all__ = [
    "CospectralRootedPair",
    "RootedSpectralKey",
    "build_coiso_pair",
    "build_cospectral_pair",
    "enumerate_graphs",
    "enumerate_signatures",
    "find_cospectrally_rooted_pairs",
    "rooted_graphs",
    "symmetric_not_sign_symmetric",
    "write_graphs",
    "write_pair_results",
]
