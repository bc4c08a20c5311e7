import math
import unittest
from fractions import Fraction

import mpmath
from hypothesis import given, settings
from hypothesis import strategies as st

from ..utils.helpers import CapExceededError, ParameterError
from . import hypergeometric as hg
from .params import Params
from .tail import expectation
from .test_tail import grid


class TestHypergeometric(unittest.TestCase):
    def test_examples(self):
        assert hg.hyp2f1_terminating(Params(4, 3)) == Fraction(200, 77)
        assert hg.hyp2f1_terminating(Params(1, 2)) == 1
        assert hg.hyp2f1_terminating(Params(2, 2)) == Fraction(5, 3)

    def test_term_by_term(self):
        """Each Pochhammer term of the series is one tail probability."""
        a, b, c, z = hg.hyp2f1_parameters(Params(4, 3))
        assert (a, b, c, z) == (1, -3, Fraction(-11, 2), Fraction(3, 2))
        terms = [
            hg.pochhammer(a, k)
            * hg.pochhammer(b, k)
            / hg.pochhammer(c, k)
            * z**k
            / math.factorial(k)
            for k in range(4)
        ]
        assert terms == [1, Fraction(9, 11), Fraction(6, 11), Fraction(18, 77)]

    def test_identity_grid(self):
        """E(X) equals the terminating 2F1 exactly."""
        for p in grid():
            assert expectation(p) == hg.hyp2f1_terminating(p), p

    @given(
        st.integers(min_value=2, max_value=9),
        st.integers(min_value=1, max_value=80),
    )
    @settings(max_examples=40)
    def test_identity_property(self, d, n):
        if (n * d) % 2:
            n += 1
        p = Params(n, d)
        assert expectation(p) == hg.hyp2f1_terminating(p)

    def test_float_cross_check(self):
        for p in [Params(4, 3), Params(10, 5), Params(50, 4), Params(30, 3)]:
            assert math.isclose(
                hg.hyp2f1_float(p), float(hg.hyp2f1_terminating(p)), rel_tol=1e-12
            )

    def test_float_beyond_thousand(self):
        """The float series stays real and exact up to the exact cap."""
        sizes = [Params(1002, 3), Params(1500, 4), Params(2000, 3), Params(2000, 10)]
        for p in sizes:
            value = hg.hyp2f1_float(p)
            assert isinstance(value, float)
            assert math.isclose(
                value, float(hg.hyp2f1_terminating(p)), rel_tol=1e-12
            ), p

    def test_float_matches_mpmath(self):
        for p in [Params(4, 3), Params(200, 5), Params(1000, 3)]:
            a, b, c, z = hg.hyp2f1_parameters(p)
            expected = mpmath.hyp2f1(
                a, b, mpmath.mpf(c.numerator) / c.denominator, float(z)
            )
            assert math.isclose(hg.hyp2f1_float(p), float(expected), rel_tol=1e-12)

    def test_generic_series(self):
        # 2F1(a, -m; c; 1) = (c-a)_m / (c)_m  (Chu-Vandermonde)
        a, m, c = Fraction(1, 3), 5, Fraction(7, 2)
        assert hg.terminating_2f1(a, -m, c, 1) == hg.pochhammer(
            c - a, m
        ) / hg.pochhammer(c, m)
        assert hg.terminating_2f1(2, 0, 5, 7) == 1

    def test_errors(self):
        with self.assertRaises(ParameterError):
            hg.terminating_2f1(1, 2, 3, 1)
        with self.assertRaises(ParameterError):
            hg.terminating_2f1(1, -3, -1, 1)
        with self.assertRaises(CapExceededError):
            hg.hyp2f1_terminating(Params(2500, 4))
