"""Throughput-optimal energy beamforming and time split for a power-beacon
assisted decode-and-forward relay link, with brute-force certification
oracles and a seeded Monte Carlo experiment harness."""

from .beamforming import (
    BeamformerSolution,
    Case,
    OracleSearchResult,
    benchmark_beamformer,
    optimal_beamformer,
    optimal_x,
    oracle_beamformer_search,
)
from .config import ParsedConfig, emit_config, parse_config
from .errors import ConfigError, DegenerateChannelError, DomainError, WPRelayError
from .model import (
    ChannelRealization,
    EffectiveChannels,
    SystemConfig,
    effective_channels,
    end_to_end_snr,
    harvested_energy,
    sample_channels,
    throughput,
)
from .simulator import (
    SweepResult,
    SweepSpec,
    TrialResult,
    direct_rate,
    run_trial,
    sweep,
)
from .timesplit import (
    TimeSplitSolution,
    lambert_w0,
    optimal_tau,
    oracle_tau_search,
    throughput_g,
)

__version__ = "0.1.0"

__all__ = [
    "BeamformerSolution",
    "Case",
    "ChannelRealization",
    "ConfigError",
    "DegenerateChannelError",
    "DomainError",
    "EffectiveChannels",
    "OracleSearchResult",
    "ParsedConfig",
    "SweepResult",
    "SweepSpec",
    "SystemConfig",
    "TimeSplitSolution",
    "TrialResult",
    "WPRelayError",
    "benchmark_beamformer",
    "direct_rate",
    "effective_channels",
    "emit_config",
    "end_to_end_snr",
    "harvested_energy",
    "lambert_w0",
    "optimal_beamformer",
    "optimal_tau",
    "optimal_x",
    "oracle_beamformer_search",
    "oracle_tau_search",
    "parse_config",
    "run_trial",
    "sample_channels",
    "sweep",
    "throughput",
    "throughput_g",
]
