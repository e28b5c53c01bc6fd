import math
from fractions import Fraction as F

import numpy as np
import pytest

from gdofic.core_math import f, g
from gdofic.finite_snr import (
    SnrLadder,
    estimate_slope,
    mac_slope,
    mac_sum_rate,
    p2p_rate,
    sample_channel,
    tin_rates,
    tin_slopes,
)
from gdofic.hk_scheme import sample_instance
from gdofic.region import AntennaProfile, ExponentProfile, symmetric_gdof


class TestSampleChannel:
    def test_deterministic(self):
        a = sample_channel(2, 2, seed=7)
        b = sample_channel(2, 2, seed=7)
        assert np.array_equal(a, b)
        assert not np.array_equal(a, sample_channel(2, 2, seed=8))

    def test_full_rank(self):
        for seed in range(50):
            h = sample_channel(3, 2, seed)
            assert np.linalg.svd(h, compute_uv=False).min() > 1e-6

    def test_unit_variance(self):
        vals = np.concatenate([
            sample_channel(1, 1, (9, k)).ravel() for k in range(10_000)
        ])
        assert np.mean(np.abs(vals) ** 2) == pytest.approx(1.0, rel=0.05)

    def test_invalid_shape(self):
        with pytest.raises(ValueError):
            sample_channel(0, 1, 0)


class TestSnrLadder:
    def test_defaults(self):
        ladder = SnrLadder()
        assert ladder.lo == 1e8 and ladder.hi == 1e12

    def test_rejects_narrow_gaps(self):
        with pytest.raises(ValueError):
            SnrLadder((1e8, 1e9))
        with pytest.raises(ValueError):
            SnrLadder((1e8,))
        with pytest.raises(ValueError):
            SnrLadder((1e12, 1e8))


class TestP2pRate:
    def test_zero_snr(self):
        h = sample_channel(2, 3, 1)
        assert p2p_rate(h, np.eye(3) / 3, 0.0) == pytest.approx(0.0, abs=1e-12)

    def test_scalar(self):
        h = np.array([[1.0 + 0j]])
        assert p2p_rate(h, np.eye(1), 3.0) == pytest.approx(2.0)

    def test_rejects_non_psd(self):
        h = sample_channel(2, 2, 2)
        with pytest.raises(ValueError):
            p2p_rate(h, -np.eye(2), 1.0)

    def test_single_user_dof_slope(self):
        ladder = SnrLadder()

        def rate(rho, seed):
            h = sample_channel(2, 2, seed)
            return p2p_rate(h, np.eye(2) / 2, rho)

        est = estimate_slope(rate, ladder, draws=5, seed=0)
        assert est.value == pytest.approx(2.0, abs=0.02)


class TestMacSumRate:
    def test_dimension_mismatch(self):
        h = sample_channel(2, 2, 0)
        with pytest.raises(ValueError):
            mac_sum_rate(3, [(h, 2, F(1)), (h, 2, F(1))], 100.0)
        with pytest.raises(ValueError):
            mac_sum_rate(2, [(h, 2, F(1))], 100.0)

    def test_zero_exponents_bounded(self):
        est = mac_slope(2, [(2, F(0)), (1, F(0))], seed=3)
        assert abs(est.value) < 0.01

    def test_two_user_slope_matches_f(self):
        spec = [(2, F(1)), (3, F(1, 2))]
        oracle = f(3, (F(1), 2), (F(1, 2), 3))
        est = mac_slope(3, spec, seed=11)
        assert est.value == pytest.approx(float(oracle), abs=0.05)

    def test_three_user_slope_matches_g(self):
        spec = [(1, F(1)), (2, F(2, 3)), (2, F(1, 3))]
        oracle = g(3, (F(1), 1), (F(2, 3), 2), (F(1, 3), 2))
        assert oracle == F(7, 3)
        est = mac_slope(3, spec, seed=12)
        assert est.value == pytest.approx(float(oracle), abs=0.05)

    def test_rates_monotone_in_rho(self):
        h1 = sample_channel(2, 2, 5)
        h2 = sample_channel(2, 1, 6)
        users = [(h1, 2, F(1)), (h2, 1, F(1, 2))]
        rates = [mac_sum_rate(2, users, rho) for rho in (1e2, 1e4, 1e6, 1e8)]
        assert all(a <= b for a, b in zip(rates, rates[1:]))


class TestTin:
    def test_interference_free_close_to_p2p(self):
        exp = ExponentProfile(F(1), F(0), F(0), F(1))
        inst = sample_instance(AntennaProfile(2, 2, 2, 2), exp, 1e8, seed=0)
        r1, _ = tin_rates(inst, 1e8)
        p2p = p2p_rate(inst.h11, np.eye(2) / 2, 1e8)
        assert abs(r1 - p2p) <= 2.0  # noise-floor interference costs O(1) bits

    def test_siso_very_weak_slope(self):
        est1, est2 = tin_slopes(AntennaProfile(1, 1, 1, 1),
                                ExponentProfile.symmetric(F(1, 4)), seed=5)
        assert est1.value == pytest.approx(0.75, abs=0.05)
        assert est2.value == pytest.approx(0.75, abs=0.05)

    def test_tin_below_fundamental_3232(self):
        ant = AntennaProfile(3, 2, 3, 2)
        exp = ExponentProfile.symmetric(F(1, 4))
        est1, est2 = tin_slopes(ant, exp, seed=5)
        fund = float(symmetric_gdof(ant, exp))
        assert fund == 1.75
        assert est1.value <= 1.6 and est2.value <= 1.6

    def test_rates_monotone_in_rho(self):
        inst = sample_instance(AntennaProfile(2, 2, 1, 1),
                               ExponentProfile.symmetric(F(1, 2)), 1e8, seed=9)
        rates = [tin_rates(inst, rho) for rho in (1e2, 1e5, 1e8, 1e11)]
        for i in (0, 1):
            seq = [r[i] for r in rates]
            assert all(a <= b for a, b in zip(seq, seq[1:]))


class TestEstimateSlope:
    def test_constant_rate(self):
        est = estimate_slope(lambda rho, s: 42.0, SnrLadder(), draws=3, seed=0)
        assert est.value == 0.0
        assert est.per_draw_spread == 0.0

    def test_linear_rate_exact(self):
        est = estimate_slope(lambda rho, s: 1.5 * math.log2(rho), SnrLadder(),
                             draws=2, seed=0)
        assert est.value == pytest.approx(1.5, abs=1e-12)

    def test_deterministic_given_seed(self):
        a = mac_slope(2, [(2, F(1, 2)), (1, F(1))], seed=77)
        b = mac_slope(2, [(2, F(1, 2)), (1, F(1))], seed=77)
        assert a == b

    def test_rejects_bad_draws(self):
        with pytest.raises(ValueError):
            estimate_slope(lambda rho, s: 0.0, SnrLadder(), draws=0, seed=0)
