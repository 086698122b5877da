from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crsplucker.errors import NonPolynomial
from crsplucker.exactalg import (
    DLaurent,
    DPoly,
    dpoly,
    dpoly_eval,
    dpoly_from_coeff_strings,
    dpoly_shift,
    dpoly_to_coeff_strings,
    format_dpoly,
    format_rat,
    laurent_reduce,
)

NEG_INF = float("-inf")


def small_rats():
    return st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def polys():
    return st.dictionaries(st.integers(0, 8), small_rats(), max_size=6).map(DPoly)


def laurents():
    return st.dictionaries(st.integers(-5, 8), small_rats(), max_size=6).map(DLaurent)


class TestBasics:
    def test_zero_normalization(self):
        assert DPoly({3: 0, 1: Fraction(0)}) == DPoly()
        assert DPoly().degree == NEG_INF

    def test_degree_and_leading(self):
        p = dpoly(0, -1, 1)  # d^2 - d
        assert p.degree == 2
        assert p.leading_coefficient == 1

    def test_negative_exponent_rejected_in_dpoly(self):
        with pytest.raises(ValueError):
            DPoly({-1: 1})

    def test_laurent_allows_negative(self):
        assert DLaurent({-2: 1}).min_exponent == -2


class TestEval:
    def test_example_d_squared_minus_d(self):
        assert dpoly_eval(dpoly(0, -1, 1), 4) == 12

    def test_zero_polynomial(self):
        assert dpoly_eval(DPoly(), 100) == 0

    def test_bitangent_formula_at_four(self):
        # 1/2 d(d-2)(d-3)(d+3) expanded
        p = dpoly(0, 9, Fraction(-9, 2), -1, Fraction(1, 2))
        assert dpoly_eval(p, 4) == 28


class TestShift:
    def test_square_shift(self):
        assert dpoly_shift(dpoly(0, 0, 1), -2) == dpoly(4, -4, 1)

    def test_constant(self):
        assert dpoly_shift(dpoly(7), 5) == dpoly(7)

    def test_falling_factorial(self):
        assert dpoly_shift(dpoly(0, -1, 1), 2) == dpoly(2, 3, 1)

    @given(polys(), st.integers(-10, 10))
    def test_roundtrip(self, p, delta):
        assert dpoly_shift(dpoly_shift(p, delta), -delta) == p

    @given(polys(), st.integers(-10, 10), st.integers(-6, 6))
    def test_eval_compatibility(self, p, delta, d0):
        assert dpoly_eval(dpoly_shift(p, delta), d0) == dpoly_eval(p, d0 + delta)


class TestLaurentReduce:
    def test_already_polynomial(self):
        p = DLaurent({2: 3, 1: 1})
        assert laurent_reduce(p) == dpoly(0, 1, 3)

    def test_negative_exponent_raises(self):
        with pytest.raises(NonPolynomial):
            laurent_reduce(DLaurent({-1: 1}))

    def test_exact_cancellation(self):
        lhs = DLaurent({3: 1, 2: -1}).shift_exponents(-2)  # d - 1
        noise = DLaurent({-1: Fraction(1, 3)})
        total = lhs + noise - noise
        assert laurent_reduce(total) == dpoly(-1, 1)


class TestRingAxioms:
    @settings(max_examples=60)
    @given(laurents(), laurents(), laurents())
    def test_distributivity(self, p, q, r):
        assert (p + q) * r == p * r + q * r

    @given(laurents(), laurents())
    def test_degree_multiplicative(self, p, q):
        if p.is_zero() or q.is_zero():
            assert (p * q).is_zero()
        else:
            assert (p * q).degree == p.degree + q.degree

    @given(laurents(), laurents())
    def test_commutativity(self, p, q):
        assert p * q == q * p

    @given(polys(), polys())
    def test_dpoly_closed_under_ring_ops(self, p, q):
        assert isinstance(p + q, DPoly)
        assert isinstance(p * q, DPoly)


class TestRendering:
    def test_rat_strings(self):
        assert format_rat(Fraction(3)) == "3"
        assert format_rat(Fraction(-1, 2)) == "-1/2"

    def test_coeff_strings(self):
        p = dpoly(0, Fraction(-1, 2), 1)
        assert dpoly_to_coeff_strings(p) == ["0", "-1/2", "1"]
        assert dpoly_to_coeff_strings(DPoly()) == []

    @given(polys())
    def test_bit_exact_roundtrip(self, p):
        assert dpoly_from_coeff_strings(dpoly_to_coeff_strings(p)) == p

    def test_human_readable(self):
        assert format_dpoly(dpoly(0, -1, 1)) == "d^2 - d"
        assert format_dpoly(DPoly()) == "0"
        assert format_dpoly(dpoly(Fraction(1, 2), 0, -3)) == "-3*d^2 + 1/2"
