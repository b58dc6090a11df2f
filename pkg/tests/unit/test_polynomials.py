"""Unit tests for Laurent polynomials and q-binomials."""

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from rigged_app.helpers import format_polynomial
from rigged_app.polynomials import LaurentPolynomial, q_binomial

q = sympy.Symbol("q")


def _sympy_binomial(m: int, p: int) -> LaurentPolynomial:
    """[m+p choose m]_q as a ratio of q-factorials, expanded by sympy."""

    def factorial(k):
        return sympy.prod([(1 - q ** (j + 1)) / (1 - q) for j in range(k)])

    expr = sympy.cancel(factorial(m + p) / (factorial(m) * factorial(p)))
    poly = sympy.Poly(sympy.expand(expr), q)
    return LaurentPolynomial.from_mapping(
        {exponent: int(c) for (exponent,), c in poly.terms()}
    )


class TestLaurentPolynomial:
    """Tests for LaurentPolynomial arithmetic."""

    def test_normalizes(self):
        poly = LaurentPolynomial.from_mapping({2: 1, -1: 3, 0: 0})
        assert poly.terms == ((-1, 3), (2, 1))

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            LaurentPolynomial(((2, 1), (1, 1)))

    def test_arithmetic(self):
        a = LaurentPolynomial.from_mapping({0: 1, 1: 1})
        b = LaurentPolynomial.from_mapping({0: 1, 1: -1})
        assert a * b == LaurentPolynomial.from_mapping({0: 1, 2: -1})
        assert a - a == LaurentPolynomial.zero()
        assert 3 * a == a * 3 == LaurentPolynomial.from_mapping({0: 3, 1: 3})
        assert a.shift(-2) == LaurentPolynomial.from_mapping({-2: 1, -1: 1})

    def test_sum_of_powers(self):
        poly = LaurentPolynomial.sum_of_powers([0, 1, 1, 3])
        assert poly.as_dict() == {0: 1, 1: 2, 3: 1}
        assert poly.at_one() == 4
        assert poly.coefficient(2) == 0

    def test_lines(self):
        poly = LaurentPolynomial.from_mapping({-1: 2, 0: 1})
        assert format_polynomial(poly) == "q^-1: 2\nq^0: 1"
        assert format_polynomial(LaurentPolynomial.zero()) == "0"


class TestQBinomial:
    """Tests for q_binomial."""

    def test_small_values(self):
        assert q_binomial(0, -3) == LaurentPolynomial.one()
        assert q_binomial(2, -1) == LaurentPolynomial.zero()
        assert q_binomial(2, 2) == LaurentPolynomial.from_mapping({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})

    def test_negative_part_count(self):
        with pytest.raises(ValueError):
            q_binomial(-1, 2)

    @given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
    def test_matches_q_factorials(self, m, p):
        assert q_binomial(m, p) == _sympy_binomial(m, p)

    @given(st.integers(min_value=1, max_value=7), st.integers(min_value=0, max_value=7))
    def test_counts_partitions_in_a_box(self, m, p):
        assert q_binomial(m, p).at_one() == sympy.binomial(m + p, m)
