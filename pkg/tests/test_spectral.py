import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings

from signedspec.core import (
    complete_graph,
    cycle_graph,
    from_edge_list,
    negate,
    sk8,
    switch,
)
from signedspec.poly import IntPolynomial, PolyMatrix
from signedspec.spectral import (
    Spectrum,
    are_cospectral,
    char_poly,
    char_poly_faddeev,
    char_poly_matrix,
    char_poly_modular,
    eigenvalues,
    has_symmetric_spectrum,
    int_det,
    jacobi_eigenvalues,
    poly_matrix_det,
)

from conftest import leibniz_char_poly, random_signed_graph, signed_graphs, sympy_char_poly

K2_POS = from_edge_list(2, [(0, 1, 1)])
K2_NEG = from_edge_list(2, [(0, 1, -1)])
X = IntPolynomial.x()

# coefficients of the SK8 polynomial, computed once with numpy.poly and sympy.charpoly
SK8_CHAR_POLY = [425, 0, -620, 0, 222, 0, -28, 0, 1]


class TestCharPoly:
    def test_k2(self):
        assert char_poly(K2_POS) == IntPolynomial([-1, 0, 1])

    def test_k3_positive(self):
        assert char_poly(complete_graph(3)) == IntPolynomial([-2, -3, 0, 1])

    def test_k3_negative(self):
        assert char_poly(complete_graph(3, -1)) == IntPolynomial([2, -3, 0, 1])

    def test_empty_graph(self):
        assert char_poly(from_edge_list(0, [])) == IntPolynomial([1])

    def test_sk8(self):
        assert char_poly(sk8()).to_list() == SK8_CHAR_POLY
        assert sympy_char_poly(sk8()).to_list() == SK8_CHAR_POLY

    @given(signed_graphs(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_matches_leibniz(self, g):
        assert char_poly(g) == leibniz_char_poly(g)

    def test_matches_sympy_on_larger_graphs(self, rng):
        for _ in range(15):
            g = random_signed_graph(rng, int(rng.integers(6, 13)))
            assert char_poly(g) == sympy_char_poly(g)

    def test_coefficient_identities(self, rng):
        for _ in range(200):
            g = random_signed_graph(rng, int(rng.integers(3, 10)), float(rng.uniform(0.2, 0.9)))
            p, n = char_poly(g), g.n
            tri = sum(g.triangle_sign(*t) for t in g.triangles())
            assert p.coeff(n) == 1
            assert p.coeff(n - 1) == 0
            assert p.coeff(n - 2) == -g.m
            assert p.coeff(n - 3) == -2 * tri

    def test_large_coefficients_stay_exact(self):
        g = complete_graph(30)
        # K_n spectrum: n-1 once, -1 with multiplicity n-1
        assert char_poly(g) == IntPolynomial.from_roots([29] + [-1] * 29)


class TestModularCharPoly:
    @settings(max_examples=60, deadline=None)
    @given(signed_graphs(0, 14))
    def test_agrees_with_faddeev(self, g):
        assert char_poly_modular(g.adj) == char_poly_faddeev(g.adj)

    def test_larger_graphs_against_sympy(self, rng):
        for _ in range(4):
            g = random_signed_graph(rng, int(rng.integers(17, 26)))
            assert char_poly(g) == sympy_char_poly(g)

    def test_general_integer_matrices(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 9))
            a = rng.integers(-50, 51, (n, n))
            expected = IntPolynomial(int(c) for c in reversed(sp.Matrix(a.tolist()).charpoly().all_coeffs()))
            assert char_poly_modular(a) == expected == char_poly_faddeev(a)

    def test_coefficients_beyond_one_prime(self):
        # K40 has coefficients far larger than any single modulus used
        g = complete_graph(40)
        assert char_poly_matrix(g.adj) == IntPolynomial.from_roots([39] + [-1] * 39)


class TestEigenvalues:
    def test_k2(self):
        assert np.allclose(eigenvalues(K2_POS).values, [-1, 1])

    def test_k3(self):
        assert np.allclose(eigenvalues(complete_graph(3)).values, [-1, -1, 2])

    def test_sk8_symmetric_about_zero(self):
        vals = np.array(eigenvalues(sk8()).values)
        assert np.allclose(vals, -vals[::-1], atol=1e-10)

    def test_values_root_the_polynomial(self, rng):
        for _ in range(40):
            g = random_signed_graph(rng, int(rng.integers(1, 12)))
            spec = eigenvalues(g)
            assert len(spec) == g.n
            assert list(spec.values) == sorted(spec.values)
            norm = spec.source_poly.coeff_norm()
            for v in spec.values:
                assert abs(spec.source_poly(v)) <= 1e-9 * norm * max(1.0, abs(v)) ** g.n
            assert abs(sum(spec.values)) < 1e-8

    def test_jacobi_against_numpy(self, rng):
        for n in (1, 2, 5, 16, 33):
            a = rng.standard_normal((n, n))
            a = a + a.T
            assert np.allclose(jacobi_eigenvalues(a), np.linalg.eigvalsh(a), atol=1e-10)

    def test_jacobi_rejects_nonsymmetric(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues([[0, 1], [0, 0]])

    def test_spectrum_validation(self):
        with pytest.raises(ValueError):
            Spectrum((1.0,), IntPolynomial([-1, 0, 1]))


class TestSymmetricSpectrum:
    def test_bipartite_grounds(self, rng):
        for _ in range(50):
            a, b = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            adj = np.zeros((a + b, a + b), dtype=np.int64)
            for i in range(a):
                for j in range(a, a + b):
                    if rng.random() < 0.6:
                        adj[i, j] = adj[j, i] = rng.choice([-1, 1])
            from signedspec.core import SignedGraph

            g = SignedGraph(adj)
            assert g.is_bipartite()
            assert has_symmetric_spectrum(g)

    def test_k3(self):
        assert not has_symmetric_spectrum(complete_graph(3))

    def test_sk8(self):
        assert has_symmetric_spectrum(sk8())

    def test_even_cycle(self):
        assert has_symmetric_spectrum(cycle_graph(6))

    def test_agrees_with_floating_oracle(self, rng):
        agree = 0
        for _ in range(1000):
            g = random_signed_graph(rng, int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.9)))
            vals = np.sort(np.linalg.eigvalsh(g.adj.astype(float)))
            floating = bool(np.allclose(vals, -vals[::-1], atol=1e-6))
            assert has_symmetric_spectrum(g) == floating
            agree += 1
        assert agree == 1000


class TestCospectral:
    def test_identity(self):
        assert are_cospectral(sk8(), sk8())

    def test_switching(self, rng):
        for _ in range(30):
            g = random_signed_graph(rng, int(rng.integers(1, 9)))
            s = [v for v in range(g.n) if rng.random() < 0.5]
            assert are_cospectral(g, switch(g, s))

    def test_k2_pair(self):
        assert are_cospectral(K2_POS, K2_NEG)

    def test_size_mismatch(self):
        assert not are_cospectral(K2_POS, from_edge_list(3, [(0, 1, 1)]))

    def test_k3_pair(self):
        assert not are_cospectral(complete_graph(3), complete_graph(3, -1))


class TestNegationIdentity:
    @given(signed_graphs())
    @settings(max_examples=80, deadline=None)
    def test_negated_char_poly(self, g):
        p = char_poly(g)
        expected = p.reflect() * (-1) ** g.n
        assert char_poly(negate(g)) == expected


class TestPolyMatrixDet:
    def test_one_by_one(self):
        p = IntPolynomial([-1, 0, 1])
        assert poly_matrix_det(PolyMatrix([[p]])) == p

    def test_two_by_two(self):
        assert poly_matrix_det(PolyMatrix([[X, -1], [-1, X]])) == IntPolynomial([-1, 0, 1])

    @pytest.mark.parametrize("dim", [0, 1, 3, 6])
    def test_identity(self, dim):
        assert poly_matrix_det(PolyMatrix.identity(dim)) == IntPolynomial([1])

    def test_evaluation_homomorphism(self, rng):
        for _ in range(30):
            dim = int(rng.integers(1, 6))
            rows = [
                [IntPolynomial(rng.integers(-3, 4, size=int(rng.integers(0, 4))).tolist()) for _ in range(dim)]
                for _ in range(dim)
            ]
            mat = PolyMatrix(rows)
            det = poly_matrix_det(mat)
            for x in rng.integers(-20, 21, size=10):
                scalar = sp.Matrix(mat.evaluate(int(x))).det()
                assert det(int(x)) == int(scalar)

    def test_int_det_against_sympy(self, rng):
        for _ in range(30):
            dim = int(rng.integers(0, 7))
            m = rng.integers(-9, 10, size=(dim, dim)).tolist()
            expected = int(sp.Matrix(m).det()) if dim else 1
            assert int_det(m) == expected
