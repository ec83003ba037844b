import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rel_err
from poisson_entropy.errors import DomainError
from poisson_entropy.mittag_leffler import CROSSOVER, log_ml, ml


def big_float_ml(alpha, x):
    # plain partial sums: extrapolating summation misjudges slowly peaking series
    mp.mp.dps = 40
    x = mp.mpf(x)
    total, k = mp.mpf(0), 0
    peak = x ** (1 / mp.mpf(alpha)) / alpha
    while True:
        t = x ** k / mp.gamma(alpha * k + 1)
        total += t
        if k > peak and t < mp.mpf(10) ** -35 * total:
            return total
        k += 1


class TestValues:
    def test_exponential_case(self):
        assert ml(1.0, 2.0).value == pytest.approx(math.e ** 2, rel=1e-14)

    @pytest.mark.parametrize("alpha", [0.1, 0.5, 1.0, 3.0])
    def test_zero_argument(self, alpha):
        r = ml(alpha, 0.0)
        assert r.value == 1.0 and r.log_value == 0.0

    def test_golden(self, example_rows):
        row = example_rows[("ml", 0.5, None, 4.0)]
        assert rel_err(ml(0.5, 4.0).value, row["value"]) < 1e-12
        row = example_rows[("log_ml", 0.5, None, 9.0)]
        assert rel_err(log_ml(0.5, 9.0), row["value"]) < 1e-12

    def test_log_of_exponential(self):
        assert log_ml(1.0, 100.0) == pytest.approx(100.0, rel=1e-14)

    def test_log_consistent_with_value(self):
        assert abs(log_ml(2.0, 10.0) - math.log(ml(2.0, 10.0).value)) < 1e-10

    @pytest.mark.parametrize("x", np.linspace(0.0, 30.0, 13))
    def test_exponential_range(self, x):
        assert ml(1.0, x).value == pytest.approx(math.exp(x), rel=1e-12)

    @pytest.mark.parametrize("alpha,x", [(0.1, 1.5), (0.3, 2.0), (0.7, 5.0), (2.0, 10.0), (2.5, 40.0),
                                         (5.0, 3.0), (5.0, 1e3)])
    def test_against_big_float(self, alpha, x):
        want = float(mp.log(big_float_ml(alpha, x)))
        assert log_ml(alpha, x) == pytest.approx(want, rel=1e-13)

    def test_finite_far_out(self):
        for alpha in (0.1, 0.5, 1.5, 5.0):
            x = 700.0 ** alpha
            assert math.isfinite(log_ml(alpha, x))
            assert log_ml(alpha, x) == pytest.approx(700.0 - math.log(alpha), rel=1e-6)


class TestBranches:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.8, 1.5, 2.0])
    def test_crossover_agreement(self, alpha):
        for r in np.linspace(20.0, 30.0, 21):
            x = r ** alpha
            s = ml(alpha, x, method="series").log_value
            a = ml(alpha, x, method="asymptotic").log_value
            assert abs(math.expm1(a - s)) < 1e-6

    def test_auto_switches(self):
        assert ml(0.5, (CROSSOVER + 1) ** 0.5).terms_used == 0
        assert ml(0.5, (CROSSOVER - 1) ** 0.5).terms_used > 0
        # above order 2 the series is always used
        assert ml(3.0, 100.0 ** 3).terms_used > 0

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            ml(1.0, 1.0, method="pade")

    @pytest.mark.parametrize("alpha,x", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.1), (1.0, math.nan)])
    def test_domain(self, alpha, x):
        with pytest.raises(DomainError):
            ml(alpha, x)


class TestMonotone:
    @pytest.mark.parametrize("alpha", [0.2, 0.5, 1.0, 1.7, 4.0])
    def test_increasing_in_x(self, alpha):
        xs = np.linspace(0.0, 50.0, 200)
        vals = [log_ml(alpha, x) for x in xs]
        assert np.all(np.diff(vals) > 0)

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0.1, 4.0), st.floats(0.0, 100.0), st.floats(1e-3, 5.0))
    def test_increasing_random(self, alpha, x, dx):
        assert log_ml(alpha, x + dx) > log_ml(alpha, x)
