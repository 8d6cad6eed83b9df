"""NEPS and rooted products of signed graphs, with their spectral formulas and
the sufficient conditions for a product to have symmetric spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from .core import RootedSignedGraph, SignedGraph, delete_vertex
from .poly import IntPolynomial, PolyMatrix
from .spectral import (
    Spectrum,
    char_poly,
    has_symmetric_spectrum,
    negation_poly,
    poly_matrix_det,
)


class Basis:
    """A nonempty set of distinct nonzero 0/1 vectors of a common length ``k``."""

    __slots__ = ("k", "vectors")

    def __init__(self, vectors: Iterable[Sequence[int]], k: int | None = None):
        vecs = [tuple(int(b) for b in v) for v in vectors]
        if not vecs:
            raise ValueError("basis must contain at least one vector")
        k = len(vecs[0]) if k is None else k
        for v in vecs:
            if len(v) != k:
                raise ValueError(f"basis vector {v} does not have length {k}")
            if any(b not in (0, 1) for b in v):
                raise ValueError(f"basis vector {v} is not a 0/1 vector")
            if not any(v):
                raise ValueError("the zero vector is not allowed in a basis")
        if len(set(vecs)) != len(vecs):
            raise ValueError("duplicate basis vectors")
        self.k = k
        self.vectors = tuple(sorted(vecs, reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Basis":
        """Accepts ``"10,01"`` or one vector per line."""
        parts = [p.strip() for p in text.replace("\n", ",").split(",")]
        parts = [p for p in parts if p and not p.startswith("#")]
        for p in parts:
            if set(p) - {"0", "1"}:
                raise ValueError(f"basis vector {p!r} must consist of 0 and 1")
        return cls([[int(ch) for ch in p] for p in parts])

    def format(self, sep: str = ",") -> str:
        return sep.join("".join(map(str, v)) for v in self.vectors)

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Basis) and set(self.vectors) == set(other.vectors)

    def __hash__(self) -> int:
        return hash(frozenset(self.vectors))

    def __repr__(self) -> str:
        return f"Basis({self.format()!r})"


def cartesian_basis(k: int) -> Basis:
    return Basis([tuple(int(i == j) for j in range(k)) for i in range(k)])


def _check_arity(factors: Sequence, basis: Basis) -> None:
    if len(factors) != basis.k:
        raise ValueError(f"basis has arity {basis.k} but {len(factors)} factors were given")


def product_vertices(orders: Sequence[int]) -> list[tuple[int, ...]]:
    """Product vertex tuples in lexicographic order; position = product vertex index."""
    return list(product(*(range(n) for n in orders)))


def neps(factors: Sequence[SignedGraph], basis: Basis) -> SignedGraph:
    """NEPS of signed graphs; edge signs multiply over the coordinates where beta is 1."""
    _check_arity(factors, basis)
    if any(f.n == 0 for f in factors):
        raise ValueError("NEPS factors must be nonempty")
    verts = product_vertices([f.n for f in factors])
    members = set(basis.vectors)
    adjs = [f.adj for f in factors]
    size = len(verts)
    out = np.zeros((size, size), dtype=np.int64)
    for a in range(size):
        u = verts[a]
        for b in range(a + 1, size):
            v = verts[b]
            # without loops, the set of differing coordinates determines beta uniquely
            beta = tuple(int(x != y) for x, y in zip(u, v))
            if beta not in members:
                continue
            sign = 1
            for i, bit in enumerate(beta):
                if bit:
                    s = adjs[i][u[i], v[i]]
                    if s == 0:
                        sign = 0
                        break
                    sign *= int(s)
            if sign:
                out[a, b] = out[b, a] = sign
    return SignedGraph(out)


def neps_eigenvalues(factor_spectra: Sequence[Spectrum], basis: Basis) -> Spectrum:
    """Eigenvalues of a NEPS from those of its factors: sum over beta of prod lambda_i^beta_i."""
    _check_arity(factor_spectra, basis)
    values = []
    for lams in product(*(s.values for s in factor_spectra)):
        total = 0.0
        for beta in basis.vectors:
            term = 1.0
            for lam, bit in zip(lams, beta):
                if bit:
                    term *= lam
            total += term
        values.append(total)
    return Spectrum(tuple(values))


# --- symmetric lists and compatible bases -----------------------------------


@dataclass(frozen=True)
class Involution:
    """Self-inverse permutation of factor positions (0-based), ``mapping[i]`` = i^-."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = self.mapping
        if sorted(m) != list(range(len(m))):
            raise ValueError("not a permutation")
        if any(m[m[i]] != i for i in range(len(m))):
            raise ValueError("permutation is not an involution")

    @property
    def k(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    @classmethod
    def identity(cls, k: int) -> "Involution":
        return cls(tuple(range(k)))


def _partners(factors: Sequence[SignedGraph]) -> list[set[int]]:
    polys = [char_poly(f) for f in factors]
    negs = [negation_poly(p) for p in polys]
    return [{j for j, q in enumerate(polys) if q == negs[i]} for i in range(len(factors))]


def all_involutions(factors: Sequence[SignedGraph]) -> Iterator[Involution]:
    """Every involution i -> i^- with Spec(factor i^-) = -Spec(factor i), in lexicographic order."""
    partners = _partners(factors)
    k = len(factors)

    def extend(mapping: list[int | None]) -> Iterator[tuple[int, ...]]:
        try:
            i = mapping.index(None)
        except ValueError:
            yield tuple(mapping)
            return
        for j in sorted(partners[i]):
            if mapping[j] is not None and j != i:
                continue
            mapping[i] = j
            mapping[j] = i
            yield from extend(mapping)
            mapping[i] = None
            mapping[j] = None

    for m in extend([None] * k):
        yield Involution(m)


def find_involution(factors: Sequence[SignedGraph]) -> Involution | None:
    return next(all_involutions(factors), None)


def partner_vector(beta: Sequence[int], inv: Involution) -> tuple[int, ...]:
    """beta' with support {i^- : beta_i = 1}."""
    out = [0] * len(beta)
    for i, bit in enumerate(beta):
        if bit:
            out[inv(i)] = 1
    return tuple(out)


def is_compatible(basis: Basis, inv: Involution) -> bool:
    if inv.k != basis.k:
        raise ValueError("involution and basis have different arity")
    # beta -> beta' is injective since inv permutes coordinates; closure makes it a bijection
    members = set(basis.vectors)
    return all(partner_vector(beta, inv) in members for beta in basis.vectors)


def is_odd_basis(basis: Basis) -> bool:
    """The basis polynomial sum_beta x^beta is odd iff every beta has odd weight."""
    return all(sum(beta) % 2 == 1 for beta in basis.vectors)


@dataclass(frozen=True)
class Certificate:
    certified: bool
    reason: str
    involution: Involution | None = None

    def __bool__(self) -> bool:
        return self.certified


MAX_INVOLUTION_SEARCH = 8


def neps_symmetry_certificate(factors: Sequence[SignedGraph], basis: Basis) -> Certificate:
    _check_arity(factors, basis)
    if not is_odd_basis(basis):
        return Certificate(False, "basis polynomial is not odd")
    first = None
    budget = None if len(factors) <= MAX_INVOLUTION_SEARCH else 1
    for inv in islice(all_involutions(factors), budget):
        first = first or inv
        if is_compatible(basis, inv):
            return Certificate(True, "symmetric factor list with compatible odd basis", inv)
    if first is None:
        return Certificate(False, "factor list is not symmetric")
    return Certificate(False, "no spectrum-negating involution is compatible with the basis", first)


# --- rooted products --------------------------------------------------------


def _check_rooted_list(sigma: SignedGraph, blocks: Sequence[RootedSignedGraph]) -> None:
    if len(blocks) != sigma.n:
        raise ValueError(f"need {sigma.n} rooted graphs, got {len(blocks)}")


def block_offsets(blocks: Sequence[RootedSignedGraph]) -> list[int]:
    offsets, acc = [], 0
    for b in blocks:
        offsets.append(acc)
        acc += b.graph.n
    return offsets


def rooted_product(sigma: SignedGraph, blocks: Sequence[RootedSignedGraph]) -> SignedGraph:
    """Identify vertex i of ``sigma`` with the root of ``blocks[i]``.

    Block i occupies a contiguous index range, in list order.
    """
    _check_rooted_list(sigma, blocks)
    offsets = block_offsets(blocks)
    total = sum(b.graph.n for b in blocks)
    out = np.zeros((total, total), dtype=np.int64)
    for off, b in zip(offsets, blocks):
        out[off:off + b.graph.n, off:off + b.graph.n] = b.graph.adj
    for i, j, s in sigma.edges():
        ri = offsets[i] + blocks[i].root
        rj = offsets[j] + blocks[j].root
        out[ri, rj] = out[rj, ri] = s
    return SignedGraph(out)


def rooted_matrix(sigma: SignedGraph, blocks: Sequence[RootedSignedGraph]) -> PolyMatrix:
    """Diagonal chi(block i); off-diagonal -A(i, j) * chi(block i minus its root)."""
    _check_rooted_list(sigma, blocks)
    whole = [char_poly(b.graph) for b in blocks]
    deleted = [char_poly(delete_vertex(b.graph, b.root)) for b in blocks]
    zero = IntPolynomial()
    rows = []
    for i in range(sigma.n):
        row = []
        for j in range(sigma.n):
            if i == j:
                row.append(whole[i])
            else:
                s = sigma.sign(i, j)
                row.append(deleted[i] * (-s) if s else zero)
        rows.append(row)
    return PolyMatrix(rows)


def rooted_product_char_poly(sigma: SignedGraph, blocks: Sequence[RootedSignedGraph]) -> IntPolynomial:
    return poly_matrix_det(rooted_matrix(sigma, blocks))


def uniform_rooted_char_poly(sigma: SignedGraph, block: RootedSignedGraph) -> IntPolynomial:
    """chi(Pi - r)^n chi(Sigma, chi(Pi) / chi(Pi - r)) with denominators cleared."""
    n = sigma.n
    whole = char_poly(block.graph)
    deleted = char_poly(delete_vertex(block.graph, block.root))
    result = IntPolynomial()
    for d, c in enumerate(char_poly(sigma).coeffs):
        if c:
            result = result + c * whole**d * deleted ** (n - d)
    return result


def rooted_symmetry_certificate(sigma: SignedGraph, block: RootedSignedGraph) -> Certificate:
    checks = [
        ("base graph", sigma),
        ("rooted graph", block.graph),
        ("rooted graph minus root", delete_vertex(block.graph, block.root)),
    ]
    for name, g in checks:
        if not has_symmetric_spectrum(g):
            return Certificate(False, f"{name} does not have symmetric spectrum")
    return Certificate(True, "base, rooted graph and root-deleted graph all have symmetric spectrum")
