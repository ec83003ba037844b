import math

import pytest

from poisson_entropy.asymptotics import (
    AsymptoteKind,
    asymptote,
    gen_renyi2_asymptote,
    log_psi_asymptote,
    psi_asymptote,
    renyi_asymptote,
    shannon_asymptote,
    sm_asymptote,
    tsallis_asymptote,
)
from poisson_entropy.entropies import gen_renyi2, renyi, shannon, tsallis
from poisson_entropy.errors import DegenerateOrder, DomainError
from poisson_entropy.series import psi


class TestPsi:
    @pytest.mark.parametrize("lam", [0.1, 3.0, 1e6])
    def test_unit_order(self, lam):
        assert psi_asymptote(1.0, lam) == 1.0

    def test_saddle_point_accuracy(self):
        assert abs(psi_asymptote(0.5, 200.0) / psi(0.5, 200.0).value - 1) < 0.01

    def test_closed_form(self):
        assert psi_asymptote(2.0, 100.0) == pytest.approx((200 * math.pi) ** -0.5 / math.sqrt(2), rel=1e-14)
        assert log_psi_asymptote(2.0, 100.0) == pytest.approx(math.log(psi_asymptote(2.0, 100.0)), rel=1e-14)


class TestShannonRenyi:
    def test_shannon_unit_log_term(self):
        assert shannon_asymptote(math.e / (2 * math.pi)) == pytest.approx(1.0, abs=1e-15)

    def test_shannon_accuracy(self):
        assert abs(shannon_asymptote(50.0) / shannon(50.0) - 1) < 0.005

    def test_shannon_closed_form(self):
        assert shannon_asymptote(100.0) == pytest.approx(0.5 * math.log(200 * math.pi) + 0.5, rel=1e-15)

    @pytest.mark.parametrize("alpha", [1 - 1e-6, 1 + 1e-6])
    def test_renyi_constant_limit(self, alpha):
        assert renyi_asymptote(alpha, 7.0) - 0.5 * math.log(14 * math.pi) == pytest.approx(0.5, abs=1e-5)

    def test_renyi_accuracy(self):
        assert abs(renyi_asymptote(2.0, 50.0) / renyi(2.0, 50.0) - 1) < 0.005

    def test_renyi_closed_form(self):
        assert renyi_asymptote(4.0, 10.0) == pytest.approx(0.5 * math.log(20 * math.pi) + math.log(4) / 6, rel=1e-15)

    @pytest.mark.parametrize("alpha", [1e-3, 0.3, 0.99, 1.01, 5.0, 1e3])
    def test_renyi_constant_positive(self, alpha):
        assert renyi_asymptote(alpha, 1.0) > 0.5 * math.log(2 * math.pi)

    def test_renyi_degenerate(self):
        with pytest.raises(DegenerateOrder):
            renyi_asymptote(1.0, 5.0)


class TestGenRenyi2:
    def test_symmetric(self):
        assert gen_renyi2_asymptote(2.0, 0.5, 9.0) == gen_renyi2_asymptote(0.5, 2.0, 9.0)

    def test_accuracy(self):
        assert abs(gen_renyi2_asymptote(0.5, 2.0, 100.0) / gen_renyi2(0.5, 2.0, 100.0) - 1) < 0.01

    def test_closed_form(self):
        assert gen_renyi2_asymptote(1.0, 2.0, 10.0) == pytest.approx(
            0.5 * math.log(20 * math.pi) + math.log(2) / 2, rel=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateOrder):
            gen_renyi2_asymptote(2.0, 2.0, 5.0)


class TestPowerFamilies:
    @pytest.mark.parametrize("lam", [0.5, 10.0, 1e5])
    def test_tsallis_limit(self, lam):
        assert tsallis_asymptote(2.0, lam) == 1.0

    def test_tsallis_power_law(self):
        assert tsallis_asymptote(0.5, 200.0) == pytest.approx((400 * math.pi) ** 0.25 / (math.sqrt(0.5) * 0.5), rel=1e-14)

    def test_tsallis_power_law_leading_order(self):
        # the ratio tends to 1, slowly: the offset -1/(1 - alpha) is subleading
        r = [tsallis(0.5, lam) / tsallis_asymptote(0.5, lam) for lam in (200.0, 2e4, 2e6)]
        assert r[0] < r[1] < r[2] < 1
        assert abs(r[2] - 1) < 0.02

    def test_sm_power_law_exact(self):
        for alpha in (0.3, 2.0, 4.0):
            ratio = sm_asymptote(alpha, 0.5, 400.0) / sm_asymptote(alpha, 0.5, 100.0)
            assert abs(ratio - 4 ** 0.25) < 1e-12

    def test_sm_limit(self):
        assert sm_asymptote(0.5, 3.0, 10.0) == 0.5

    @pytest.mark.parametrize("args", [(1.0, 2.0), (2.0, 1.0)])
    def test_sm_degenerate(self, args):
        with pytest.raises(DegenerateOrder):
            sm_asymptote(*args, 5.0)


class TestDispatch:
    def test_kinds(self):
        assert asymptote("psi", 4.0, alpha=2.0) == psi_asymptote(2.0, 4.0)
        assert asymptote(AsymptoteKind.SHANNON, 4.0) == shannon_asymptote(4.0)
        assert asymptote("sm", 4.0, 2.0, 0.5) == sm_asymptote(2.0, 0.5, 4.0)
        assert AsymptoteKind.GEN_RENYI2.arity == 2 and AsymptoteKind.PSI.arity == 1

    def test_gen_renyi1_has_none(self):
        with pytest.raises(DomainError):
            asymptote("gen_renyi1", 4.0, alpha=0.5)
