import math
import unittest

import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from ..exact.params import Params
from ..exact.tail import expectation, expectation_log, tail_log, tail_product
from ..utils.helpers import ParameterError
from . import limits as lim
from . import radius as rad
from .stirling import stirling_tail_approx

GRID = [10**3, 10**4, 10**5, 10**6]


class TestStirling(unittest.TestCase):
    def test_examples(self):
        assert stirling_tail_approx(Params(10**4, 3), 1) == pytest.approx(1, abs=1e-3)
        p = Params(10**4, 3)
        assert stirling_tail_approx(p, 100) == pytest.approx(
            math.exp(tail_log(p, 100)), rel=1e-2
        )
        p = Params(10**6, 4)
        assert stirling_tail_approx(p, 1000) == pytest.approx(
            math.exp(tail_log(p, 1000)), rel=5e-3
        )

    def test_relative_error(self):
        """Under 1% for n = 10^4 and k <= 10 sqrt(n)."""
        for d in [3, 4]:
            p = Params(10**4, d)
            for k in list(range(1, 50)) + list(range(50, 1001, 25)):
                exact = math.exp(tail_log(p, k))
                assert abs(stirling_tail_approx(p, k) - exact) / exact < 1e-2, (d, k)

    def test_k_equals_n(self):
        p = Params(10, 3)
        assert stirling_tail_approx(p, 10) == pytest.approx(
            float(tail_product(p, 10)), rel=1e-12
        )


class TestLimits(unittest.TestCase):
    def test_query_validation(self):
        for kwargs in [
            {"d": 2},
            {"d": 3, "rho": 1.0},
            {"d": 3, "rho": -0.1},
            {"d": 3, "x": 0.0},
        ]:
            with self.assertRaises(ParameterError):
                lim.LimitQuery(**kwargs)

    def test_limit_value(self):
        assert lim.limit_value(lim.LimitQuery(3, 0.25)) == 1
        assert lim.limit_value(lim.LimitQuery(3, 0.5)) == pytest.approx(
            0.846482, abs=1e-6
        )
        assert lim.limit_value(lim.LimitQuery(10, 0.75)) == 0

    def test_limit_expression_examples(self):
        n = 10**6
        assert lim.limit_expression(n, lim.LimitQuery(3, 0.3)) == pytest.approx(
            1, abs=1e-2
        )
        assert lim.limit_expression(n, lim.LimitQuery(3, 0.5)) == pytest.approx(
            math.exp(-1 / 6), abs=1e-2
        )
        assert lim.limit_expression(n, lim.LimitQuery(3, 0.8)) < 1e-3
        assert lim.limit_expression(n, lim.LimitQuery(3, 0.0)) == 1.0

    def test_trichotomy(self):
        """Gap below 1e-2 at n = 10^6 for every (d, rho) pair."""
        for d in [3, 4, 10]:
            for rho in [0.3, 0.5, 0.7]:
                q = lim.LimitQuery(d, rho)
                gap = abs(lim.limit_expression(10**6, q) - lim.limit_value(q))
                assert gap < 1e-2, (d, rho, gap)

    def test_rho_too_large(self):
        with self.assertRaises(ParameterError):
            lim.limit_expression(2, lim.LimitQuery(3, 0.95))

    def test_scaled_tail(self):
        assert lim.scaled_tail(lim.LimitQuery(3, x=1.0)) == pytest.approx(
            0.846482, abs=1e-6
        )
        assert lim.scaled_tail(lim.LimitQuery(3, x=1e-9)) == pytest.approx(1)
        assert lim.scaled_tail(lim.LimitQuery(4, x=2.0)) == pytest.approx(
            0.367879, abs=1e-6
        )
        with self.assertRaises(ParameterError):
            lim.scaled_tail(lim.LimitQuery(3))

    @given(
        st.floats(min_value=0.01, max_value=5),
        st.floats(min_value=0.01, max_value=5),
        st.integers(min_value=3, max_value=50),
    )
    def test_scaled_tail_decreasing(self, x1, x2, d):
        lo, hi = sorted([x1, x2])
        if hi - lo < 1e-6:
            return
        assert lim.scaled_tail(lim.LimitQuery(d, x=lo)) > lim.scaled_tail(
            lim.LimitQuery(d, x=hi)
        )
        # larger d means a larger (d-2)/(2d), hence a thinner tail
        assert lim.scaled_tail(lim.LimitQuery(d, x=hi)) > lim.scaled_tail(
            lim.LimitQuery(d + 1, x=hi)
        )

    def test_scaled_law(self):
        n = 10**6
        for x in [0.5, 1.0, 2.0]:
            finite = math.exp(tail_log(Params(n, 3), round(x * math.sqrt(n))))
            assert abs(finite - math.exp(-(x**2) / 6)) < 1e-2
        for x in [0.5, 1.0, 2.0]:
            q = lim.LimitQuery(4, x=x)
            assert abs(lim.scaled_tail_finite(n, q) - lim.scaled_tail(q)) < 1e-2


class TestExpectationConstant(unittest.TestCase):
    def test_examples(self):
        assert lim.expectation_constant(3) == pytest.approx(2.17080, abs=1e-5)
        assert lim.expectation_constant(4) == pytest.approx(math.sqrt(math.pi))
        assert lim.expectation_constant(10**9) == pytest.approx(
            math.sqrt(math.pi / 2), rel=1e-6
        )
        with self.assertRaises(ParameterError):
            lim.expectation_constant(2)

    def test_gaussian_integral(self):
        for d in [3, 4, 5, 10]:
            decay = (d - 2) / (2 * d)
            value, _ = quad(lambda x: math.exp(-(x**2) * decay), 0, math.inf)
            assert value == pytest.approx(lim.expectation_constant(d), rel=1e-8)

    def test_finite_sums(self):
        """E(X)/sqrt(n) within 2% of c(d) at n = 10^6."""
        n = 10**6
        for d in [3, 4, 10]:
            ratio = expectation_log(Params(n, d)) / math.sqrt(n)
            assert ratio == pytest.approx(lim.expectation_constant(d), rel=2e-2)

    def test_exact_and_log_expectation(self):
        p = Params(2000, 3)
        assert expectation_log(p) == pytest.approx(float(expectation(p)), rel=1e-12)


class TestConvergenceReport(unittest.TestCase):
    def test_half(self):
        report = lim.convergence_report(lim.LimitQuery(3, 0.5), GRID)
        assert report.kind == "limit"
        assert report.predicted == pytest.approx(math.exp(-1 / 6))
        assert all(b <= a for a, b in zip(report.gaps, report.gaps[1:]))
        assert report.final_gap < 0.01
        assert [row["n"] for row in report.rows()] == GRID

    def test_rho_zero(self):
        report = lim.convergence_report(lim.LimitQuery(4, 0.0), [10, 100, 1000])
        assert report.predicted == 1
        assert all(value == 1 for _, value in report.points)

    def test_above_half(self):
        report = lim.convergence_report(lim.LimitQuery(5, 0.6), GRID)
        assert report.points[-1][1] < 1e-2

    def test_scaled(self):
        report = lim.scaled_convergence_report(4, 2.0, GRID)
        assert report.kind == "scaled"
        assert report.predicted == pytest.approx(math.exp(-1))
        assert report.final_gap < 1e-2

    def test_parallel_is_deterministic(self):
        q = lim.LimitQuery(3, 0.5)
        serial = lim.convergence_report(q, GRID, workers=1)
        parallel = lim.convergence_report(q, GRID, workers=4)
        assert serial.to_dict() == parallel.to_dict()

    def test_bad_grid(self):
        with self.assertRaises(ParameterError):
            lim.convergence_report(lim.LimitQuery(3), [])
        with self.assertRaises(ParameterError):
            lim.convergence_report(lim.LimitQuery(3), [1000, 100])

    def test_expectation_report(self):
        report = lim.expectation_report(3, [10**4, 10**5])
        assert report.predicted == pytest.approx(2.17080, abs=1e-5)
        assert report.final_gap / report.predicted < 2e-2


class TestRadius(unittest.TestCase):
    def test_ball_size(self):
        assert [rad.ball_size(3, r) for r in range(5)] == [1, 4, 10, 22, 46]
        assert [rad.ball_size(4, r) for r in range(3)] == [1, 5, 17]
        assert rad.ball_size(2, 3) == 7

    def test_radius_law(self):
        assert rad.radius_law(Params(2**16, 3)) == pytest.approx(8)
        with self.assertRaises(ParameterError):
            rad.radius_law(Params(16, 2))

    def test_expected_ball_radius(self):
        assert rad.expected_ball_radius(Params(1, 2)) == 0
        # n = 4, d = 3: radius >= 1 iff X = 4
        assert rad.expected_ball_radius(Params(4, 3)) == pytest.approx(18 / 77)
        small = rad.expected_ball_radius(Params(2**16, 3))
        large = rad.expected_ball_radius(Params(2**18, 3))
        assert 6.5 <= small <= 9.5
        assert large - small == pytest.approx(1, abs=0.5)
