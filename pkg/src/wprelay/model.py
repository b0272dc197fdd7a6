"""System model: scenario parameters, channel sampling, energy/SNR/throughput.

A multi-antenna power beacon (PB) charges a single-antenna source S and
relay R during a harvesting phase of duration tau, after which S -> R -> D
decode-and-forward transmission uses the harvested energy. All quantities
are linear (watts, meters); rates are bits/s/Hz.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar

import numpy as np

from .errors import DegenerateChannelError, DomainError

UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class SystemConfig:
    """Deterministic scenario parameters.

    Distances: d1 PB->S, d2 PB->R, d3 S->R, d4 R->D, optional d_sd S->D
    (used only by the direct-transmission baseline; defaults to the
    collinear d3 + d4 when unset).
    """

    P: float            # PB transmit power [W]
    N0: float           # noise variance [W]
    N: int              # PB antenna count
    d1: float
    d2: float
    d3: float
    d4: float
    eta: float = 0.4    # energy conversion efficiency
    alpha: float = 3.0  # path loss exponent
    d_sd: float | None = None

    # Block time cancels out of both gamma and R, so it is not a tunable.
    T: ClassVar[float] = 1.0

    def __post_init__(self):
        if self.P <= 0:
            raise DomainError(f"P must be > 0, got {self.P}")
        if self.N0 <= 0:
            raise DomainError(f"N0 must be > 0, got {self.N0}")
        if not 0 < self.eta < 1:
            raise DomainError(f"eta must be in (0,1), got {self.eta}")
        if self.alpha <= 0:
            raise DomainError(f"alpha must be > 0, got {self.alpha}")
        if self.N < 1 or int(self.N) != self.N:
            raise DomainError(f"N must be an integer >= 1, got {self.N}")
        for name in ("d1", "d2", "d3", "d4"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.d_sd is not None and self.d_sd <= 0:
            raise DomainError(f"d_sd must be > 0, got {self.d_sd}")

    @property
    def sd_distance(self) -> float:
        """S->D distance for the direct baseline (default: collinear d3+d4)."""
        return self.d_sd if self.d_sd is not None else self.d3 + self.d4


@dataclass(eq=False)
class ChannelRealization:
    """One draw of all random channels.

    h1, h2 are the PB->S and PB->R vectors (length N); f1, f2 the S->R and
    R->D scalars; f0 the optional S->D scalar for the direct baseline.
    """

    h1: np.ndarray
    h2: np.ndarray
    f1: complex
    f2: complex
    f0: complex | None = None


@dataclass(eq=False)
class EffectiveChannels:
    """Distance/gain-weighted channel vectors and their projection geometry.

    heff1 = (|f1| / sqrt(d1^a d3^a)) h1 and heff2 analogously, so both hops
    are comparable in a single max-min objective. The scalars are

        a = || proj of heff1 onto span(heff2) ||
        b = || residual ||
        c = || heff2 ||

    c equals the ratio form |heff1^H heff2| / a whenever a > 0 and is
    extended by continuity to a = 0.
    """

    heff1: np.ndarray
    heff2: np.ndarray
    a: float
    b: float
    c: float


def _draw_cscg(rng: np.random.Generator, n: int) -> np.ndarray:
    # circularly-symmetric complex Gaussian, zero mean, unit variance
    return (rng.standard_normal(n) + 1j * rng.standard_normal(n)) / math.sqrt(2.0)


def sample_channels(cfg: SystemConfig, seed: int) -> ChannelRealization:
    """Draw one i.i.d. Rayleigh-fading realization, deterministically in seed.

    All entries are CSCG(0, 1). Exact-zero draws (measure-zero events) are
    rejected and resampled so downstream projections never see degenerate
    channels.
    """
    rng = np.random.default_rng(seed)

    def vec() -> np.ndarray:
        v = _draw_cscg(rng, cfg.N)
        while not np.any(v):
            v = _draw_cscg(rng, cfg.N)
        return v

    def scalar() -> complex:
        s = complex(_draw_cscg(rng, 1)[0])
        while s == 0:
            s = complex(_draw_cscg(rng, 1)[0])
        return s

    h1 = vec()
    h2 = vec()
    f1 = scalar()
    f2 = scalar()
    f0 = scalar()
    return ChannelRealization(h1=h1, h2=h2, f1=f1, f2=f2, f0=f0)


def effective_channels(cfg: SystemConfig, ch: ChannelRealization) -> EffectiveChannels:
    """Scale each hop by its information-link gain and path losses, then
    split heff1 into the components parallel and orthogonal to heff2."""
    a_exp = cfg.alpha
    heff1 = (abs(ch.f1) / math.sqrt(cfg.d1**a_exp * cfg.d3**a_exp)) * ch.h1
    heff2 = (abs(ch.f2) / math.sqrt(cfg.d2**a_exp * cfg.d4**a_exp)) * ch.h2

    n1 = np.linalg.norm(heff1)
    n2 = np.linalg.norm(heff2)
    if n1 == 0 or n2 == 0:
        raise DegenerateChannelError("zero-norm effective channel")

    # projection of heff1 onto span(heff2): (heff2^H heff1 / ||heff2||^2) heff2
    coeff = np.vdot(heff2, heff1) / (n2 * n2)
    par = coeff * heff2
    a = float(np.linalg.norm(par))
    b = float(np.linalg.norm(heff1 - par))
    return EffectiveChannels(heff1=heff1, heff2=heff2, a=a, b=b, c=float(n2))


def _check_unit(w: np.ndarray) -> None:
    nrm2 = float(np.linalg.norm(w)) ** 2
    if abs(nrm2 - 1.0) > UNIT_NORM_TOL:
        raise DomainError(f"beamformer must be unit norm, got ||w||^2 = {nrm2}")


def harvested_energy(
    cfg: SystemConfig, ch: ChannelRealization, w: np.ndarray, tau: float
) -> tuple[float, float]:
    """Energy harvested by S and R over the first phase of duration tau*T.

    E_s = eta |w^T h1|^2 P tau T d1^(-alpha), and E_r analogously with
    h2, d2. There is no noise term: harvested noise power is negligible.
    """
    _check_unit(w)
    if not 0 < tau < 1:
        raise DomainError(f"tau must be in (0,1), got {tau}")
    common = cfg.eta * cfg.P * tau * cfg.T
    e_s = common * abs(np.dot(w, ch.h1)) ** 2 * cfg.d1 ** (-cfg.alpha)
    e_r = common * abs(np.dot(w, ch.h2)) ** 2 * cfg.d2 ** (-cfg.alpha)
    return float(e_s), float(e_r)


def end_to_end_snr(
    cfg: SystemConfig, ch: ChannelRealization, w: np.ndarray, tau: float
) -> float:
    """Effective end-to-end SNR of the DF link.

    gamma = 2 tau eta P / ((1-tau) N0)
            * min(|w^T h1|^2 |f1|^2 / (d1^a d3^a),
                  |w^T h2|^2 |f2|^2 / (d2^a d4^a))
    """
    _check_unit(w)
    if not 0 < tau < 1:
        raise DomainError(f"tau must be in (0,1), got {tau}")
    a_exp = cfg.alpha
    g1 = abs(np.dot(w, ch.h1)) ** 2 * abs(ch.f1) ** 2 / (cfg.d1**a_exp * cfg.d3**a_exp)
    g2 = abs(np.dot(w, ch.h2)) ** 2 * abs(ch.f2) ** 2 / (cfg.d2**a_exp * cfg.d4**a_exp)
    return float(2.0 * tau * cfg.eta * cfg.P / ((1.0 - tau) * cfg.N0) * min(g1, g2))


def throughput(gamma: float, tau: float) -> float:
    """Achievable throughput R = ((1-tau)/2) log2(1+gamma), bits/s/Hz."""
    if not 0 < tau < 1:
        raise DomainError(f"tau must be in (0,1), got {tau}")
    return (1.0 - tau) / 2.0 * math.log2(1.0 + gamma)
