"""Exact Laurent polynomial arithmetic: examples, errors, and ring laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sqzero.qpoly import ONE, Q, ZERO, InexactDivisionError, QLaurentPoly


def P(terms):
    return QLaurentPoly(terms)


class TestCanonicalForm:
    def test_zero_polynomial_has_empty_terms(self):
        assert dict(ZERO.terms) == {}
        assert dict(P({3: 0, -1: 0}).terms) == {}
        assert not ZERO

    def test_zero_coefficients_are_dropped(self):
        assert dict(P({0: 1, 5: 0}).terms) == {0: 1}

    def test_equality_is_structural(self):
        assert P({1: 2, 0: -1}) == P({0: -1, 1: 2})
        assert P({1: 1}) != P({1: 2})
        assert P({0: 7}) == 7
        assert ZERO == 0

    def test_hash_consistent_with_int_equality(self):
        assert hash(P({0: 7})) == hash(7)
        assert hash(ZERO) == hash(0)
        assert P({1: 1, 0: 1}) in {P({0: 1, 1: 1})}


class TestArithmetic:
    def test_add_cancels_inverse(self):
        assert Q + (-Q) == ZERO

    def test_add_merges_terms(self):
        assert P({0: 1, 1: 1}) + Q == P({0: 1, 1: 2})

    def test_add_keeps_disjoint_exponents(self):
        assert P({-1: 1}) + Q == P({-1: 1, 1: 1})

    def test_mul_difference_of_squares(self):
        assert P({0: 1, 1: 1}) * P({0: 1, 1: -1}) == P({0: 1, 2: -1})

    def test_mul_cancels_exponents(self):
        assert P({-1: 1}) * Q == ONE

    def test_mul_by_zero(self):
        assert P({0: 1, 1: 1}) * ZERO == ZERO

    def test_int_coercion(self):
        assert 2 * Q == P({1: 2})
        assert Q + 1 == P({0: 1, 1: 1})
        assert 1 - Q == P({0: 1, 1: -1})

    def test_pow(self):
        assert (ONE + Q) ** 2 == P({0: 1, 1: 2, 2: 1})
        assert Q**0 == ONE


class TestShift:
    def test_shift_up(self):
        assert P({0: 1, 1: 1}).shift(2) == P({2: 1, 3: 1})

    def test_shift_down_cancels(self):
        assert Q.shift(-1) == ONE

    def test_shift_zero_polynomial(self):
        assert ZERO.shift(5) == ZERO


class TestExactDiv:
    def test_two_term_quotient(self):
        # (1 - q^2) / (1 - q) = 1 + q, by long division
        a = P({0: 1, 2: -1})
        b = P({0: 1, 1: -1})
        assert a.exact_div(b) == P({0: 1, 1: 1})

    def test_three_term_quotient(self):
        # (1 - q^3) / (1 - q) = 1 + q + q^2
        a = P({0: 1, 3: -1})
        b = P({0: 1, 1: -1})
        assert a.exact_div(b) == P({0: 1, 1: 1, 2: 1})

    def test_self_division(self):
        p = P({0: 1, 1: 1})
        assert p.exact_div(p) == ONE

    def test_inexact_division_raises(self):
        with pytest.raises(InexactDivisionError):
            P({0: 1, 2: 1}).exact_div(P({0: 1, 1: 1}))
        with pytest.raises(InexactDivisionError):
            P({0: 1}).exact_div(P({0: 2}))

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            ONE.exact_div(ZERO)

    def test_laurent_division(self):
        assert ONE.exact_div(P({-1: 1})) == Q


class TestEvalAt:
    def test_monomial(self):
        assert Q.eval_at(2) == 2

    def test_count_polynomial_small(self):
        assert P({2: 2, 1: -1}).eval_at(2) == 6

    def test_count_polynomial_larger(self):
        assert P({4: 2, 2: -1}).eval_at(2) == 28

    def test_negative_exponent_gives_fraction(self):
        assert P({-1: 1}).eval_at(2) == Fraction(1, 2)
        assert P({-1: 1, 1: 4}).eval_at(2) == Fraction(17, 2)

    def test_integer_valued_laurent_result_is_int(self):
        value = P({-1: 2}).eval_at(2)
        assert value == 1 and isinstance(value, int)

    def test_eval_at_zero(self):
        assert P({0: 3, 2: 5}).eval_at(0) == 3
        with pytest.raises(ZeroDivisionError):
            P({-1: 1}).eval_at(0)

    def test_negative_base(self):
        assert P({-2: 3, 1: 1}).eval_at(-2) == Fraction(-5, 4)


class TestStructure:
    def test_is_polynomial(self):
        assert not P({-1: 1, 0: 1}).is_polynomial()
        assert ZERO.is_polynomial()
        assert P({2: 2, 1: -1}).is_polynomial()

    def test_degree_valuation_leading(self):
        p = P({-1: 4, 3: -2})
        assert p.degree() == 3
        assert p.valuation() == -1
        assert p.leading_coefficient() == -2
        assert ZERO.degree() is None
        assert ZERO.valuation() is None
        assert ZERO.leading_coefficient() == 0


class TestRendering:
    @pytest.mark.parametrize(
        "terms,expected",
        [
            ({}, "0"),
            ({0: 1}, "1"),
            ({0: -3}, "-3"),
            ({1: 1}, "q"),
            ({1: -1, 2: 2}, "-q + 2*q^2"),
            ({2: 2, 4: -1}, "2*q^2 - q^4"),
            ({-1: 1, 1: 1}, "q^-1 + q"),
            ({0: 1, 1: -2, 5: 3}, "1 - 2*q + 3*q^5"),
        ],
    )
    def test_canonical_text(self, terms, expected):
        assert str(P(terms)) == expected


# operands as in the stated invariant ranges: exponents in [-10, 10],
# coefficients in [-100, 100]
polys = st.builds(
    QLaurentPoly,
    st.dictionaries(st.integers(-10, 10), st.integers(-100, 100), max_size=6),
)


class TestRingLaws:
    @given(polys, polys, polys)
    def test_add_associative_commutative(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a

    @given(polys, polys, polys)
    def test_mul_associative_commutative(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a

    @given(polys, polys, polys)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(polys, polys)
    def test_exact_div_inverts_mul(self, a, b):
        if b:
            assert (a * b).exact_div(b) == a

    @given(polys, polys, st.integers(-5, 5).filter(bool))
    def test_eval_is_ring_homomorphism(self, a, b, x):
        assert (a * b).eval_at(x) == a.eval_at(x) * b.eval_at(x)
        assert (a + b).eval_at(x) == a.eval_at(x) + b.eval_at(x)
