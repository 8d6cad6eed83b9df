from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from signedspec.poly import IntPolynomial, PolyMatrix, interpolate

coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


def test_trims_trailing_zeros():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).is_zero()
    assert IntPolynomial().degree == -1


def test_rejects_float_and_fractional_coefficients():
    with pytest.raises(TypeError):
        IntPolynomial([1.5])
    with pytest.raises(ValueError):
        IntPolynomial([Fraction(1, 2)])


def test_arithmetic_small():
    x = IntPolynomial.x()
    assert (x - 1) * (x + 1) == IntPolynomial([-1, 0, 1])
    assert (x + 1) ** 3 == IntPolynomial([1, 3, 3, 1])
    assert IntPolynomial.from_roots([1, -1]) == IntPolynomial([-1, 0, 1])
    assert IntPolynomial([3]) == 3


def test_reflect_and_parity():
    p = IntPolynomial([1, 2, 3, 4])
    assert p.reflect() == IntPolynomial([1, -2, 3, -4])
    assert IntPolynomial([-1, 0, 1]).has_parity(0)
    assert not IntPolynomial([-1, 1, 1]).has_parity(0)
    assert IntPolynomial([0, 2, 0, 1]).has_parity(1)


def test_render():
    assert IntPolynomial([-1, 0, 1]).render() == "x^2 - 1"
    assert IntPolynomial([2, -3, 0, 1]).render("t") == "t^3 - 3*t + 2"
    assert IntPolynomial().to_list() == [0]


@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_evaluation_is_a_ring_homomorphism(a, b, x):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(coeff_lists)
def test_interpolation_recovers_polynomial(a):
    p = IntPolynomial(a)
    xs = list(range(-2, max(p.degree, 0) + 2))
    assert interpolate(xs, [p(x) for x in xs]) == p


def test_interpolation_rejects_non_integer_result():
    with pytest.raises(ValueError):
        interpolate([0, 2], [0, 1])


def test_poly_matrix_shape_and_bound():
    x = IntPolynomial.x()
    m = PolyMatrix([[x, -1], [-1, x * x]])
    assert m.dim == 2
    assert m.degree_bound() == 3
    with pytest.raises(ValueError):
        PolyMatrix([[x, 1]])
