from __future__ import annotations

from itertools import permutations
from pathlib import Path

import numpy as np
import pytest
import sympy as sp
from hypothesis import strategies as st

from signedspec.core import RootedSignedGraph, SignedGraph
from signedspec.poly import IntPolynomial

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def random_signed_graph(rng: np.random.Generator, n: int, density: float = 0.5) -> SignedGraph:
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i, j] = adj[j, i] = 1 if rng.random() < 0.5 else -1
    return SignedGraph(adj)


def random_rooted(rng: np.random.Generator, n: int) -> RootedSignedGraph:
    return RootedSignedGraph(random_signed_graph(rng, n), int(rng.integers(n)))


def sympy_char_poly(sigma: SignedGraph) -> IntPolynomial:
    """Oracle: sympy's characteristic polynomial, independent of the package's routine."""
    if sigma.n == 0:
        return IntPolynomial([1])
    lam = sp.Symbol("lam")
    coeffs = sp.Matrix(sigma.adj.tolist()).charpoly(lam).all_coeffs()
    return IntPolynomial(int(c) for c in reversed(coeffs))


def leibniz_char_poly(sigma: SignedGraph) -> IntPolynomial:
    """Oracle: det(xI - A) summed over all permutations. Tiny n only."""
    n = sigma.n
    x = IntPolynomial.x()
    entries = [
        [(x if i == j else IntPolynomial()) - int(sigma.adj[i, j]) for j in range(n)] for i in range(n)
    ]
    total = IntPolynomial()
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = IntPolynomial([(-1) ** inversions])
        for i in range(n):
            term = term * entries[i][perm[i]]
            if term.is_zero():
                break
        total = total + term
    return total


@st.composite
def signed_graphs(draw, min_n: int = 0, max_n: int = 7):
    n = draw(st.integers(min_n, max_n))
    upper = draw(st.lists(st.sampled_from([-1, 0, 0, 1]), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    adj = np.zeros((n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            adj[i, j] = adj[j, i] = upper[k]
            k += 1
    return SignedGraph(adj)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240531)


# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
