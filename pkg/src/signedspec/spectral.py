"""Exact characteristic polynomials, polynomial-matrix determinants and eigensolving.

Decisions about symmetric spectra and cospectrality are made on exact integer
polynomials only; floating eigenvalues are for reporting and for the oracles in
the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, prod
from typing import Sequence

import numpy as np

from .core import SignedGraph
from .poly import IntPolynomial, PolyMatrix, interpolate

JACOBI_TOL = 1e-12
EIG_TOL = 1e-8


# Above this order the multi-modular route is much faster than exact Faddeev.
MODULAR_THRESHOLD = 16


def char_poly_matrix(a) -> IntPolynomial:
    """det(xI - A) of a square integer matrix, computed exactly."""
    a = np.array(a, dtype=object)
    n = a.shape[0] if a.size else 0
    if n > MODULAR_THRESHOLD:
        return char_poly_modular(a)
    return char_poly_faddeev(a)


def char_poly_faddeev(a) -> IntPolynomial:
    """Faddeev-LeVerrier recursion in Python integers.

    Every division by ``k`` is exact because the coefficients of an integer
    matrix's characteristic polynomial are integers.
    """
    a = np.array(a, dtype=object)
    n = a.shape[0] if a.size else 0
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    if n == 0:
        return IntPolynomial([1])
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    m = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[n - k + 1] * eye
        tr = (a * m.T).sum()
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier produced a non-integer coefficient"
        coeffs[n - k] = q
    return IntPolynomial(coeffs)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if m % q == 0:
            return m == q
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for base in (2, 7, 61):  # deterministic below 2^32
        x = pow(base, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _prime(index: int) -> int:
    """The index-th prime below 2^31, counting down."""
    start = (1 << 31) - 1 if index == 0 else _prime(index - 1) - 2
    m = start
    while not _is_prime(m):
        m -= 2
    return m


def _hessenberg_char_poly_mod(h: np.ndarray, p: int) -> np.ndarray:
    """Coefficients (low to high) of det(xI - H) mod p, H reduced to Hessenberg form in place."""
    n = h.shape[0]
    for j in range(n - 2):
        pivot = j + 1
        nz = np.nonzero(h[pivot:, j])[0]
        if nz.size == 0:
            continue
        i = pivot + int(nz[0])
        if i != pivot:
            h[[i, pivot], :] = h[[pivot, i], :]
            h[:, [i, pivot]] = h[:, [pivot, i]]
        inv = pow(int(h[pivot, j]), -1, p)
        u = h[pivot + 1:, j] * inv % p
        if not u.any():
            continue
        # row_i -= u_i row_pivot, then col_pivot += sum_i u_i col_i to keep a similarity
        h[pivot + 1:, :] = (h[pivot + 1:, :] - np.outer(u, h[pivot, :]) % p) % p
        h[:, pivot] = (h[:, pivot] + (h[:, pivot + 1:] * u % p).sum(axis=1)) % p
    # p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (h_{i+1,i} ... h_{m,m-1}) p_{i-1}
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - h[m - 1, m - 1] * prev % p) % p
        if m > 1:
            coef = np.zeros(m - 1, dtype=np.int64)
            run = 1
            for i in range(m - 1, 0, -1):
                run = run * int(h[i, i - 1]) % p
                coef[i - 1] = int(h[i - 1, m - 1]) * run % p
            cur = (cur - (coef[:, None] * polys[: m - 1] % p).sum(axis=0) % p) % p
        polys[m] = cur
    return polys[n]


def char_poly_modular(a) -> IntPolynomial:
    """det(xI - A) by Hessenberg reduction modulo several primes and Chinese remaindering.

    Each coefficient is a signed sum of principal minors, so its absolute value
    is at most prod(1 + |row_i|) by Hadamard's inequality; enough primes are
    used to cover twice that bound.
    """
    a = np.array(a, dtype=object)
    n = a.shape[0] if a.size else 0
    if n == 0:
        return IntPolynomial([1])
    bound = prod(1 + isqrt(sum(int(v) ** 2 for v in row)) + 1 for row in a)
    residues: list[int] | None = None
    modulus = 1
    index = 0
    while modulus <= 2 * bound:
        p = _prime(index)
        index += 1
        h = np.array([[int(v) % p for v in row] for row in a], dtype=np.int64)
        coeffs = [int(c) for c in _hessenberg_char_poly_mod(h, p)]
        if residues is None:
            residues = coeffs
        else:
            # combine x = r mod M and x = c mod p
            inv = pow(modulus % p, -1, p)
            residues = [r + modulus * ((c - r) * inv % p) for r, c in zip(residues, coeffs)]
        modulus *= p
    half = modulus // 2
    return IntPolynomial([r - modulus if r > half else r for r in residues])


def char_poly(sigma: SignedGraph) -> IntPolynomial:
    return char_poly_matrix(sigma.adj.astype(np.int64))


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by Bareiss fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def poly_matrix_det(mat: PolyMatrix) -> IntPolynomial:
    """Exact determinant by evaluation at D+1 integer points and interpolation.

    D is the row-max degree bound, so D+1 samples pin the determinant down.
    """
    if mat.dim == 0:
        return IntPolynomial([1])
    bound = mat.degree_bound()
    xs = list(range(bound + 1))
    ys = [int_det(mat.evaluate(x)) for x in xs]
    return interpolate(xs, ys)


@dataclass(frozen=True)
class Spectrum:
    """Sorted real eigenvalues with multiplicity.

    ``source_poly`` is the exact characteristic polynomial when one is known;
    spectra assembled from a product formula carry ``None``.
    """

    values: tuple[float, ...]
    source_poly: IntPolynomial | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))
        if self.source_poly is not None and self.source_poly.degree != len(self.values):
            raise ValueError("spectrum length does not match its polynomial's degree")

    def __len__(self) -> int:
        return len(self.values)

    def negated(self) -> "Spectrum":
        poly = self.source_poly
        if poly is not None:
            poly = poly.reflect() if poly.degree % 2 == 0 else -poly.reflect()
        return Spectrum(tuple(-v for v in self.values), poly)

    def matches(self, other: "Spectrum", tol: float = EIG_TOL) -> bool:
        if self.source_poly is not None and other.source_poly is not None:
            return self.source_poly == other.source_poly
        return multiset_close(self.values, other.values, tol)


def multiset_close(a: Sequence[float], b: Sequence[float], tol: float = EIG_TOL) -> bool:
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol for x, y in zip(sorted(a), sorted(b)))


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """Rounds of disjoint index pairs covering every pair once (circle method)."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            p, q = players[i], players[m - 1 - i]
            if p >= 0 and q >= 0:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(a, tol: float = JACOBI_TOL, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits all pairs in round-robin order; the rotations within one
    round act on disjoint index pairs and so commute, which lets a round be
    applied as a single orthogonal similarity. Stops when the off-diagonal
    Frobenius norm falls below ``tol`` times the matrix norm.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0] if a.size else 0
    if n <= 1:
        return np.diag(a).copy() if n else np.zeros(0)
    if not np.allclose(a, a.T):
        raise ValueError("matrix is not symmetric")
    scale = max(np.linalg.norm(a), 1.0)
    rounds = _round_robin(n)
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            break
        for pairs in rounds:
            p = np.array([pq[0] for pq in pairs])
            q = np.array([pq[1] for pq in pairs])
            apq = a[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            # a <- R^T a R, touching only the rows and columns in this round
            cp, cq = a[:, p], a[:, q]
            a[:, p], a[:, q] = c * cp - s * cq, s * cp + c * cq
            rp, rq = a[p, :], a[q, :]
            a[p, :], a[q, :] = c[:, None] * rp - s[:, None] * rq, s[:, None] * rp + c[:, None] * rq
        a = 0.5 * (a + a.T)
    return np.sort(np.diag(a))


def eigenvalues(sigma: SignedGraph) -> Spectrum:
    vals = jacobi_eigenvalues(sigma.adj)
    return Spectrum(tuple(vals), char_poly(sigma))


def has_symmetric_spectrum(sigma: SignedGraph) -> bool:
    """Exact test: chi(-x) = (-1)^n chi(x), i.e. only terms of degree = n mod 2."""
    return poly_has_symmetric_roots(char_poly(sigma))


def poly_has_symmetric_roots(p: IntPolynomial) -> bool:
    return p.has_parity(p.degree)


def are_cospectral(first: SignedGraph, second: SignedGraph) -> bool:
    return first.n == second.n and char_poly(first) == char_poly(second)


def negation_poly(p: IntPolynomial) -> IntPolynomial:
    """Characteristic polynomial of -A given that of A: (-1)^n p(-x)."""
    r = p.reflect()
    return r if p.degree % 2 == 0 else -r
