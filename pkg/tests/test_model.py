import math

import numpy as np
import pytest

from wprelay import (
    ChannelRealization,
    DegenerateChannelError,
    DomainError,
    SystemConfig,
    effective_channels,
    end_to_end_snr,
    harvested_energy,
    sample_channels,
    throughput,
)


def make_cfg(**kwargs):
    base = dict(P=1.0, N0=1.0, N=4, d1=3.0, d2=3.0, d3=5.0, d4=5.0)
    base.update(kwargs)
    return SystemConfig(**base)


UNIT_CFG = dict(P=1.0, N0=1.0, d1=1.0, d2=1.0, d3=1.0, d4=1.0, eta=0.5, alpha=3.0)


class TestSystemConfig:
    def test_valid(self):
        cfg = make_cfg()
        assert cfg.sd_distance == 10.0  # defaults to d3 + d4

    def test_explicit_d_sd(self):
        assert make_cfg(d_sd=7.5).sd_distance == 7.5

    @pytest.mark.parametrize(
        "bad",
        [
            dict(P=0.0),
            dict(N0=-1.0),
            dict(eta=0.0),
            dict(eta=1.0),
            dict(alpha=0.0),
            dict(N=0),
            dict(d1=0.0),
            dict(d4=-2.0),
            dict(d_sd=0.0),
        ],
    )
    def test_invariants_rejected(self, bad):
        with pytest.raises(DomainError):
            make_cfg(**bad)


class TestSampler:
    def test_shapes_and_determinism(self):
        cfg = make_cfg(N=4)
        ch1 = sample_channels(cfg, 7)
        ch2 = sample_channels(cfg, 7)
        assert ch1.h1.shape == (4,) and ch1.h2.shape == (4,)
        np.testing.assert_array_equal(ch1.h1, ch2.h1)
        np.testing.assert_array_equal(ch1.h2, ch2.h2)
        assert ch1.f1 == ch2.f1 and ch1.f2 == ch2.f2 and ch1.f0 == ch2.f0

    def test_distinct_seeds_differ(self):
        cfg = make_cfg()
        ch1 = sample_channels(cfg, 1)
        ch2 = sample_channels(cfg, 2)
        assert not np.array_equal(ch1.h1, ch2.h1)
        assert ch1.f1 != ch2.f1

    def test_unit_variance(self):
        # law of large numbers on |h1[i]|^2 over 1e5 entries
        cfg = make_cfg(N=100)
        acc = 0.0
        for seed in range(1000):
            acc += float(np.sum(np.abs(sample_channels(cfg, seed).h1) ** 2))
        assert abs(acc / 1e5 - 1.0) < 0.02

    def test_nonzero_draws(self):
        cfg = make_cfg(N=1)
        for seed in range(200):
            ch = sample_channels(cfg, seed)
            assert ch.f1 != 0 and ch.f2 != 0 and ch.f0 != 0
            assert np.any(ch.h1) and np.any(ch.h2)


class TestEffectiveChannels:
    def test_scalar_rank_one(self):
        # heff1 = 2, heff2 = 3 via unit f's and unit distances
        cfg = SystemConfig(N=1, **UNIT_CFG)
        ch = ChannelRealization(
            h1=np.array([2.0 + 0j]), h2=np.array([3.0 + 0j]), f1=1.0, f2=1.0
        )
        eff = effective_channels(cfg, ch)
        assert eff.a == pytest.approx(2.0, abs=1e-15)
        assert eff.b == pytest.approx(0.0, abs=1e-15)
        assert eff.c == pytest.approx(3.0, abs=1e-15)

    def test_orthogonal_pair(self):
        cfg = SystemConfig(N=2, **UNIT_CFG)
        ch = ChannelRealization(
            h1=np.array([1.0 + 0j, 0.0]), h2=np.array([0.0, 1.0 + 0j]), f1=1.0, f2=1.0
        )
        eff = effective_channels(cfg, ch)
        assert eff.a == 0.0
        assert eff.b == pytest.approx(1.0, abs=1e-15)
        assert eff.c == pytest.approx(1.0, abs=1e-15)

    def test_pythagoras_and_c_identity(self):
        cfg = make_cfg(N=4)
        for seed in range(300):
            eff = effective_channels(cfg, sample_channels(cfg, seed))
            n1 = np.linalg.norm(eff.heff1) ** 2
            assert eff.a**2 + eff.b**2 == pytest.approx(n1, rel=1e-12)
            n2 = np.linalg.norm(eff.heff2)
            assert abs(eff.c - n2) <= 1e-10 * n2

    def test_scaling_weights(self):
        cfg = make_cfg(N=3)
        ch = sample_channels(cfg, 11)
        eff = effective_channels(cfg, ch)
        expect1 = abs(ch.f1) / math.sqrt(cfg.d1**cfg.alpha * cfg.d3**cfg.alpha) * ch.h1
        np.testing.assert_allclose(eff.heff1, expect1, rtol=1e-14)

    def test_degenerate_rejected(self):
        cfg = SystemConfig(N=2, **UNIT_CFG)
        ch = ChannelRealization(
            h1=np.zeros(2, dtype=complex), h2=np.array([1.0 + 0j, 0.0]), f1=1.0, f2=1.0
        )
        with pytest.raises(DegenerateChannelError):
            effective_channels(cfg, ch)


class TestHarvestedEnergy:
    def test_direct_substitution(self):
        # eta=0.5, P=4, tau=0.5, d1=1, |w^T h1|^2 = 1 -> E_s = 1.0
        cfg = SystemConfig(P=4.0, N0=1.0, N=1, d1=1.0, d2=1.0, d3=1.0, d4=1.0, eta=0.5)
        ch = ChannelRealization(h1=np.array([1.0 + 0j]), h2=np.array([1.0 + 0j]), f1=1.0, f2=1.0)
        e_s, e_r = harvested_energy(cfg, ch, np.array([1.0 + 0j]), 0.5)
        assert e_s == pytest.approx(1.0, rel=1e-15)
        assert e_r == pytest.approx(1.0, rel=1e-15)

    def test_matched_alignment(self):
        cfg = make_cfg(N=4, eta=0.5)
        ch = sample_channels(cfg, 3)
        w = np.conj(ch.h1) / np.linalg.norm(ch.h1)
        e_s, _ = harvested_energy(cfg, ch, w, 0.3)
        expect = cfg.eta * np.linalg.norm(ch.h1) ** 2 * cfg.P * 0.3 * cfg.d1 ** (-cfg.alpha)
        assert e_s == pytest.approx(expect, rel=1e-12)

    def test_linearity_in_p_tau_eta(self):
        ch = sample_channels(make_cfg(), 5)
        w = np.conj(ch.h1) / np.linalg.norm(ch.h1)
        base = harvested_energy(make_cfg(P=1.0, eta=0.4), ch, w, 0.25)
        assert harvested_energy(make_cfg(P=10.0, eta=0.4), ch, w, 0.25)[0] == pytest.approx(
            10 * base[0], rel=1e-12
        )
        assert harvested_energy(make_cfg(P=10.0, eta=0.4), ch, w, 0.25)[1] == pytest.approx(
            10 * base[1], rel=1e-12
        )
        assert harvested_energy(make_cfg(P=1.0, eta=0.8), ch, w, 0.25)[0] == pytest.approx(
            2 * base[0], rel=1e-12
        )
        assert harvested_energy(make_cfg(P=1.0, eta=0.4), ch, w, 0.5)[0] == pytest.approx(
            2 * base[0], rel=1e-12
        )

    def test_non_unit_w_rejected(self):
        cfg = make_cfg()
        ch = sample_channels(cfg, 1)
        with pytest.raises(DomainError):
            harvested_energy(cfg, ch, np.ones(4, dtype=complex), 0.5)


class TestEndToEndSnr:
    def test_direct_substitution(self):
        # tau=0.5, eta=0.5, P=4, N0=1, unit distances, branch gains {1, 2}
        cfg = SystemConfig(P=4.0, N0=1.0, N=1, d1=1.0, d2=1.0, d3=1.0, d4=1.0, eta=0.5)
        ch = ChannelRealization(
            h1=np.array([1.0 + 0j]), h2=np.array([math.sqrt(2) + 0j]), f1=1.0, f2=1.0
        )
        gamma = end_to_end_snr(cfg, ch, np.array([1.0 + 0j]), 0.5)
        assert gamma == pytest.approx(4.0, rel=1e-15)

    def test_zero_branch(self):
        cfg = SystemConfig(P=4.0, N0=1.0, N=2, d1=1.0, d2=1.0, d3=1.0, d4=1.0, eta=0.5)
        ch = ChannelRealization(
            h1=np.array([1.0 + 0j, 0.0]), h2=np.array([0.0, 1.0 + 0j]), f1=1.0, f2=1.0
        )
        w = np.array([1.0 + 0j, 0.0])  # orthogonal to h2
        assert end_to_end_snr(cfg, ch, w, 0.5) == 0.0

    def test_matches_energy_chaining(self):
        # gamma recomputed by chaining E_s, E_r through the hop SNRs
        cfg = make_cfg(N=4, eta=0.4, P=2.5, N0=0.7)
        for seed in range(50):
            ch = sample_channels(cfg, seed)
            w = np.conj(ch.h1) / np.linalg.norm(ch.h1)
            tau = 0.37
            e_s, e_r = harvested_energy(cfg, ch, w, tau)
            snr1 = 2 * e_s / ((1 - tau) * cfg.T * cfg.d3**cfg.alpha) * abs(ch.f1) ** 2 / cfg.N0
            snr2 = 2 * e_r / ((1 - tau) * cfg.T * cfg.d4**cfg.alpha) * abs(ch.f2) ** 2 / cfg.N0
            gamma = end_to_end_snr(cfg, ch, w, tau)
            assert gamma == pytest.approx(min(snr1, snr2), rel=1e-12)

    def test_scale_covariance(self):
        # scaling |f1| and d3^(alpha/2) together leaves gamma unchanged
        cfg = make_cfg(N=4)
        ch = sample_channels(cfg, 9)
        w = np.conj(ch.h2) / np.linalg.norm(ch.h2)
        gamma = end_to_end_snr(cfg, ch, w, 0.4)
        s = 3.7
        cfg2 = make_cfg(N=4, d3=cfg.d3 * s ** (2.0 / cfg.alpha))
        ch2 = ChannelRealization(h1=ch.h1, h2=ch.h2, f1=ch.f1 * s, f2=ch.f2, f0=ch.f0)
        assert end_to_end_snr(cfg2, ch2, w, 0.4) == pytest.approx(gamma, rel=1e-12)

    def test_tau_domain(self):
        cfg = make_cfg()
        ch = sample_channels(cfg, 0)
        w = np.conj(ch.h1) / np.linalg.norm(ch.h1)
        for tau in (0.0, 1.0, -0.1, 1.5):
            with pytest.raises(DomainError):
                end_to_end_snr(cfg, ch, w, tau)


class TestThroughput:
    def test_direct_substitution(self):
        assert throughput(3.0, 0.5) == pytest.approx(0.5, rel=1e-15)

    def test_zero_gamma(self):
        for tau in (0.1, 0.5, 0.9):
            assert throughput(0.0, tau) == 0.0

    def test_vanishing_transmit_time(self):
        assert throughput(10.0, 1 - 1e-12) < 1e-11
