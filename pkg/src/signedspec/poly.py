"""Exact univariate polynomials with integer coefficients, and square matrices of them."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class IntPolynomial:
    """Dense integer polynomial, ``coeffs[d]`` is the coefficient of ``x**d``.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``.
    Instances are immutable and hashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c}")
                c = c.numerator
            elif not isinstance(c, int):
                # numpy integers and the like; refuse floats outright
                if isinstance(c, float):
                    raise TypeError("floating coefficients are not allowed")
                c = int(c)
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "IntPolynomial":
        p = cls.constant(1)
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    def coeff(self, d: int) -> int:
        return self._coeffs[d] if 0 <= d < len(self._coeffs) else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self, var: str = "x") -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if d == 0:
                body = str(a)
            else:
                mono = var if d == 1 else f"{var}^{d}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_list(self) -> list[int]:
        """Coefficients low-to-high; the wire form used by the CLI and JSON output."""
        return list(self._coeffs) if self._coeffs else [0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(("IntPolynomial", self._coeffs))

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x):
        """Horner evaluation; works for ints, Fractions, floats and polynomials."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> "IntPolynomial":
        """The polynomial p(-x)."""
        return IntPolynomial(c if d % 2 == 0 else -c for d, c in enumerate(self._coeffs))

    def has_parity(self, parity: int) -> bool:
        """True if every nonzero term has degree congruent to ``parity`` mod 2."""
        return all(c == 0 for d, c in enumerate(self._coeffs) if d % 2 != parity % 2)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(d * c for d, c in enumerate(self._coeffs) if d > 0)

    def coeff_norm(self) -> float:
        return float(sum(abs(c) for c in self._coeffs))


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPolynomial:
    """Exact interpolation through ``(xs[i], ys[i])`` via Newton divided differences.

    Raises ValueError if the interpolant does not have integer coefficients.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    m = len(xs)
    table = [Fraction(y) for y in ys]
    newton = [table[0]] if m else []
    for level in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(m - level)
        ]
        newton.append(table[0])
    # expand the Newton form back to monomial coefficients
    coeffs = [Fraction(0)]
    for k in range(m - 1, -1, -1):
        # coeffs = coeffs * (x - xs[k]) + newton[k]
        shifted = [Fraction(0)] + coeffs
        for i, c in enumerate(coeffs):
            shifted[i] -= xs[k] * c
        shifted[0] += newton[k]
        coeffs = shifted
    return IntPolynomial(coeffs)


class PolyMatrix:
    """Square matrix with IntPolynomial entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[IntPolynomial | int]]):
        dim = len(rows)
        built = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("PolyMatrix must be square")
            built.append(
                tuple(e if isinstance(e, IntPolynomial) else IntPolynomial.constant(e) for e in row)
            )
        self._rows = tuple(built)

    @classmethod
    def identity(cls, dim: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> IntPolynomial:
        i, j = ij
        return self._rows[i][j]

    @property
    def rows(self) -> tuple[tuple[IntPolynomial, ...], ...]:
        return self._rows

    def degree_bound(self) -> int:
        """Sum over rows of the largest entry degree; bounds the determinant's degree."""
        return sum(max((max(e.degree, 0) for e in row), default=0) for row in self._rows)

    def evaluate(self, x: int) -> list[list[int]]:
        return [[e(x) for e in row] for row in self._rows]

    def __repr__(self) -> str:
        return f"PolyMatrix({[[e.to_list() for e in row] for row in self._rows]})"
