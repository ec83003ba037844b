import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import fd, rel_err
from poisson_entropy.analysis import (
    RhoPoint,
    ScanReport,
    entropy_dlambda,
    gen_renyi2_anomaly_probe,
    locate_alpha0,
    make_grid,
    rho,
    rho_point,
    rho_prime,
    scan_monotonicity,
)
from poisson_entropy.entropies import gen_renyi1
from poisson_entropy.errors import DegenerateOrder, DomainError, EmptyGrid


class TestRho:
    def test_zero_at_one(self):
        assert abs(rho(1.0)) < 1e-10

    def test_golden(self, example_rows):
        row = example_rows[("rho", 0.5, None, None)]
        assert rel_err(rho(0.5), row["value"]) < 1e-12
        assert rho(0.5) > 0

    def test_small_order_tends_to_zero(self):
        assert 0 < rho(1e-5) < rho(0.5)
        assert rho(1e-6) < rho(1e-5)

    def test_positive_below_one(self):
        for a in np.linspace(0.02, 0.98, 50):
            assert rho(a) > 0

    def test_refuses_tiny_order(self):
        with pytest.raises(DomainError):
            rho(1e-7)

    def test_rho_prime_signs(self):
        assert rho_prime(0.05) > 0
        assert rho_prime(0.5) < 0

    @pytest.mark.parametrize("alpha", [0.05, 0.3, 0.7, 1.0, 1.5, 2.0])
    def test_rho_prime_against_fd(self, alpha):
        num = fd(rho, alpha, 1e-6)
        assert rel_err(rho_prime(alpha), num) < 1e-6

    def test_alpha0(self):
        a0 = locate_alpha0()
        assert 0.05 < a0 < 0.5
        assert abs(a0 - 0.15) < 0.05
        assert rho_prime(a0 - 1e-4) > 0 > rho_prime(a0 + 1e-4)

    def test_point(self):
        p = rho_point(0.3)
        assert isinstance(p, RhoPoint)
        assert p.rho == rho(0.3) and p.rho_prime == rho_prime(0.3)

    @pytest.mark.parametrize("alpha", [0.05, 0.1, 0.3, 0.5, 0.9])
    def test_slope_at_one_is_minus_rho_prime(self, alpha):
        d = entropy_dlambda("gen_renyi1", 1.0, alpha)
        assert rel_err(d, -rho_prime(alpha)) < 1e-5


class TestEntropyDlambda:
    def test_shannon_increasing_at_one(self):
        assert entropy_dlambda("shannon", 1.0) > 0

    def test_gen_renyi1_decreasing_at_one(self):
        assert entropy_dlambda("gen_renyi1", 1.0, 0.1) < 0

    def test_gen_renyi1_order_15_increasing(self):
        for lam in np.arange(1.0, 6.0, 0.01):
            assert entropy_dlambda("gen_renyi1", lam, 15.0) > 0

    @pytest.mark.parametrize("kind,alpha,beta", [("shannon", None, None), ("renyi", 0.4, None),
                                                 ("renyi", 3.0, None), ("gen_renyi1", 0.1, None),
                                                 ("gen_renyi1", 1.0, None), ("gen_renyi1", 25.0, None),
                                                 ("gen_renyi2", 0.3, 2.0), ("tsallis", 0.5, None),
                                                 ("tsallis", 2.0, None), ("sharma_mittal", 2.0, 0.5),
                                                 ("sharma_mittal", 0.5, 3.0)])
    @pytest.mark.parametrize("lam", [0.3, 1.0, 2.7, 15.0, 80.0])
    def test_analytic_matches_fd(self, kind, alpha, beta, lam):
        a = entropy_dlambda(kind, lam, alpha, beta)
        f = entropy_dlambda(kind, lam, alpha, beta, method="fd")
        assert abs(a - f) <= 1e-5 * abs(a) + 1e-9

    def test_degenerate_order(self):
        with pytest.raises(DegenerateOrder):
            entropy_dlambda("renyi", 2.0, 1.0)

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            entropy_dlambda("shannon", 2.0, method="spline")

    @settings(max_examples=40, deadline=None)
    @given(st.floats(0.2, 5.0), st.floats(0.5, 60.0))
    def test_renyi_increasing(self, alpha, lam):
        if abs(alpha - 1) < 1e-3:
            alpha = 2.0
        assert entropy_dlambda("renyi", lam, alpha) > 0


class TestGrid:
    def test_decimal_points(self):
        g = make_grid(0.05, 0.3, 0.05)
        assert g.tolist() == [0.05, 0.1, 0.15, 0.2, 0.25, 0.3]

    @pytest.mark.parametrize("lo,hi,step", [(0.0, 1.0, 0.1), (2.0, 1.0, 0.1), (1.0, 2.0, 0.0), (1.0, 2.0, -1.0)])
    def test_invalid(self, lo, hi, step):
        with pytest.raises(DomainError):
            make_grid(lo, hi, step)

    def test_too_few_points(self):
        with pytest.raises(EmptyGrid):
            scan_monotonicity("shannon", 1.0, 1.1, 0.1)


class TestScans:
    def test_small_order_single_minimum(self):
        rep = scan_monotonicity("gen_renyi1", 0.1, 20.0, 0.01, alpha=0.1)
        assert len(rep.decreasing_intervals) == 1
        assert rep.decreasing_intervals[0][0] == pytest.approx(0.1)
        assert len(rep.minima()) == 1 and not rep.maxima()
        lam_min = rep.minima()[0]
        assert abs(entropy_dlambda("gen_renyi1", lam_min, 0.1)) < 1e-5
        assert all(d > 0 for lam, d in zip(rep.grid, rep.derivatives) if lam > lam_min + 0.01)

    def test_order_25(self):
        rep = scan_monotonicity("gen_renyi1", 1.0, 2.5, 0.001, alpha=25.0)
        assert rep.decreasing_within(1.0, 1.15)
        assert not rep.decreasing_within(2.0, 2.5)

    def test_tsallis_monotone(self):
        rep = scan_monotonicity("tsallis", 0.05, 100.0, 0.05, alpha=2.0)
        assert rep.decreasing_intervals == [] and rep.is_monotone_increasing

    def test_report_invariants(self):
        rep = scan_monotonicity("gen_renyi1", 1.0, 3.2, 0.001, alpha=100.0)
        assert len(rep.grid) == len(rep.values) == len(rep.derivatives)
        assert np.all(np.diff(rep.grid) > 0)
        for a, b in rep.decreasing_intervals:
            assert entropy_dlambda("gen_renyi1", 0.5 * (a + b), 100.0) < -1e-10
        for near in (1.0, 2.0, 3.0):
            assert rep.decreasing_within(near, near + 0.15)

    def test_fd_method_matches(self):
        a = scan_monotonicity("gen_renyi1", 0.5, 6.0, 0.05, alpha=0.1)
        b = scan_monotonicity("gen_renyi1", 0.5, 6.0, 0.05, alpha=0.1, method="fd")
        assert len(a.extrema) == len(b.extrema) == 1
        assert a.extrema[0][0] == pytest.approx(b.extrema[0][0], abs=1e-4)

    def test_threads_give_same_report(self):
        a = scan_monotonicity("gen_renyi1", 0.5, 6.0, 0.05, alpha=0.1)
        b = scan_monotonicity("gen_renyi1", 0.5, 6.0, 0.05, alpha=0.1, threads=3)
        assert a == b

    def test_values_match_entropy(self):
        rep = scan_monotonicity("gen_renyi1", 0.5, 3.0, 0.5, alpha=0.3)
        for lam, v in zip(rep.grid, rep.values):
            assert v == pytest.approx(gen_renyi1(0.3, lam), rel=1e-13)

    def test_to_dict(self):
        d = scan_monotonicity("shannon", 1.0, 2.0, 0.5).to_dict()
        assert set(d) >= {"grid", "values", "derivatives", "decreasing_intervals", "extrema"}

    def test_report_validation(self):
        with pytest.raises(ValueError):
            ScanReport("shannon", None, None, [1.0, 0.5], [1.0, 1.0], [0.0, 0.0])
        with pytest.raises(ValueError):
            ScanReport("shannon", None, None, [1.0, 2.0], [1.0], [0.0, 0.0])


class TestGenRenyi2Probe:
    def test_mixed_regime_proven(self):
        rep = gen_renyi2_anomaly_probe(0.5, 2.0, 0.1, 50.0, 0.1)
        assert rep.proven_monotone and rep.decreasing_intervals == []

    def test_mixed_regime_really_increasing(self):
        rep = scan_monotonicity("gen_renyi2", 0.1, 50.0, 0.1, 0.5, 2.0)
        assert rep.decreasing_intervals == []

    def test_small_orders_dip(self):
        rep = gen_renyi2_anomaly_probe(0.02, 0.01, 0.1, 150.0, 0.1)
        assert not rep.proven_monotone
        assert len(rep.decreasing_intervals) == 1
        assert rep.decreasing_intervals[0][0] == pytest.approx(0.1)
        assert [k for _, k in rep.extrema] == ["min"]

    def test_symmetric(self):
        a = gen_renyi2_anomaly_probe(0.02, 0.01, 0.5, 20.0, 0.5)
        b = gen_renyi2_anomaly_probe(0.01, 0.02, 0.5, 20.0, 0.5)
        assert a.values == b.values and a.derivatives == b.derivatives
        assert a.decreasing_intervals == b.decreasing_intervals and a.extrema == b.extrema
