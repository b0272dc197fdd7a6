"""Seeded Monte Carlo engine for the throughput studies.

Three sweep variables are supported: antenna_count (optimal vs benchmark
throughput over N), placement_grid (node-position study with fixed pair
sums d1+d2 and d3+d4), and snr (relaying vs direct transmission over P/N0
in dB). Every trial's randomness derives solely from base_seed +
trial-index, so results are reproducible and schedule-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .beamforming import benchmark_beamformer, optimal_beamformer
from .errors import ConfigError
from .model import ChannelRealization, SystemConfig, effective_channels, sample_channels
from .timesplit import optimal_tau, throughput_g

SWEEP_VARIABLES = ("antenna_count", "placement_grid", "snr")

# Fig. 4 style default placement axis: d1 and d3 from 7 to 13 m
DEFAULT_PLACEMENT_VALUES = tuple(float(v) for v in range(7, 14))


@dataclass(frozen=True)
class TrialResult:
    """Per-realization max-min gains, time splits and rates [bits/s/Hz]."""

    z_m_opt: float
    z_m_bench: float
    tau_opt: float
    tau_bench: float
    rate_opt: float
    rate_bench: float
    rate_direct: float


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    values: tuple[float, ...]
    trials: int = 1000
    base_seed: int = 42


@dataclass(frozen=True)
class SweepResult:
    """Averaged sweep table; rows follow the sweep order."""

    variable: str
    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]


def _optimized_rate(cfg: SystemConfig, z: float) -> tuple[float, float]:
    # (tau_hat, rate) for the relay objective at max-min gain z
    beta = 2.0 * cfg.eta * cfg.P / cfg.N0 * z
    if beta <= 0:
        return math.nan, 0.0
    ts = optimal_tau(beta)
    return ts.tau_hat, ts.rate


def direct_rate(cfg: SystemConfig, ch: ChannelRealization) -> float:
    """Throughput of PB-powered direct S -> D transmission.

    A single energy target makes matched alignment w = conj(h1)/||h1||
    optimal, and the full post-harvest block carries one hop, so there is
    no 1/2 pre-log and no doubling of the transmit power:

        rate = (1-tau) log2(1 + tau/(1-tau) * beta_d),
        beta_d = (eta P / N0) ||h1||^2 |f0|^2 / (d1^a d_sd^a).
    """
    if ch.f0 is None:
        raise ConfigError("direct baseline requires the S->D channel f0")
    d_sd = cfg.sd_distance
    gain = float(np.linalg.norm(ch.h1)) ** 2 * abs(ch.f0) ** 2
    beta_d = cfg.eta * cfg.P / cfg.N0 * gain / (cfg.d1**cfg.alpha * d_sd**cfg.alpha)
    if beta_d <= 0:
        return 0.0
    tau_hat = optimal_tau(beta_d).tau_hat
    return throughput_g(tau_hat, beta_d, 1.0, 1.0)


def run_trial(cfg: SystemConfig, seed: int) -> TrialResult:
    """One channel realization: optimal and benchmark beamformers, each
    with its own optimal time split, plus the direct-transmission rate."""
    ch = sample_channels(cfg, seed)
    eff = effective_channels(cfg, ch)
    opt = optimal_beamformer(eff)
    bench = benchmark_beamformer(cfg, ch, eff)
    tau_opt, rate_opt = _optimized_rate(cfg, opt.z_m)
    tau_bench, rate_bench = _optimized_rate(cfg, bench.z_m)
    return TrialResult(
        z_m_opt=opt.z_m,
        z_m_bench=bench.z_m,
        tau_opt=tau_opt,
        tau_bench=tau_bench,
        rate_opt=rate_opt,
        rate_bench=rate_bench,
        rate_direct=direct_rate(cfg, ch),
    )


def _mean_rates(cfg: SystemConfig, trials: int, base_seed: int) -> tuple[float, float, float]:
    acc = np.zeros(3)
    for i in range(trials):
        t = run_trial(cfg, base_seed + i)
        acc += (t.rate_opt, t.rate_bench, t.rate_direct)
    acc /= trials
    return float(acc[0]), float(acc[1]), float(acc[2])


def _check_spec(spec: SweepSpec) -> None:
    if spec.variable not in SWEEP_VARIABLES:
        raise ConfigError(
            f"unknown sweep variable {spec.variable!r}, expected one of {SWEEP_VARIABLES}"
        )
    if not spec.values:
        raise ConfigError("sweep values must be nonempty")
    if spec.trials < 1:
        raise ConfigError(f"trials must be >= 1, got {spec.trials}")


def sweep(spec: SweepSpec, cfg_base: SystemConfig) -> SweepResult:
    """Run spec.trials seeded trials per sweep value and average the rates.

    placement_grid varies d1 and d3 over spec.values with d2 and d4 derived
    from the base config's pair sums (d1+d2 and d3+d4 held fixed); snr
    reinterprets each value as P/N0 in dB with N0 = 1.
    """
    _check_spec(spec)

    rows: list[tuple[float, ...]] = []
    if spec.variable == "antenna_count":
        for v in spec.values:
            n = int(v)
            if n != v or n < 1:
                raise ConfigError(f"antenna count must be an integer >= 1, got {v}")
            cfg = replace(cfg_base, N=n)
            r_opt, r_bench, _ = _mean_rates(cfg, spec.trials, spec.base_seed)
            rows.append((float(n), r_opt, r_bench))
        return SweepResult("antenna_count", ("n", "rate_opt", "rate_bench"), tuple(rows))

    if spec.variable == "placement_grid":
        sum1 = cfg_base.d1 + cfg_base.d2
        sum2 = cfg_base.d3 + cfg_base.d4
        for d1 in spec.values:
            d2 = sum1 - d1
            if d1 <= 0 or d2 <= 0:
                raise ConfigError(f"d1 = {d1} leaves nonpositive d2 = {d2} (d1+d2 = {sum1})")
            for d3 in spec.values:
                d4 = sum2 - d3
                if d3 <= 0 or d4 <= 0:
                    raise ConfigError(f"d3 = {d3} leaves nonpositive d4 = {d4} (d3+d4 = {sum2})")
                cfg = replace(cfg_base, d1=d1, d2=d2, d3=d3, d4=d4)
                r_opt, _, _ = _mean_rates(cfg, spec.trials, spec.base_seed)
                rows.append((float(d1), float(d3), r_opt))
        return SweepResult("placement_grid", ("d1", "d3", "rate_opt"), tuple(rows))

    # snr: transmit SNR P/N0 in dB, N0 fixed to 1
    for snr_db in spec.values:
        cfg = replace(cfg_base, P=10.0 ** (snr_db / 10.0), N0=1.0)
        r_opt, _, r_direct = _mean_rates(cfg, spec.trials, spec.base_seed)
        rows.append((float(snr_db), r_opt, r_direct))
    return SweepResult("snr", ("snr_db", "rate_relay", "rate_direct"), tuple(rows))
