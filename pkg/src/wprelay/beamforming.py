"""Closed-form max-min energy beamformer, large-N benchmark, and oracles.

The unit-norm beamformer w maximizing

    min(|w^T heff1|^2, |w^T heff2|^2)

lies in the span of conj(heff1) and conj(heff2) and can be written as

    w = x * u_par + sqrt(1 - x^2) * u_perp,   x in [0, 1],

where u_par is the unit direction of the projection of conj(heff1) onto
span(conj(heff2)) and u_perp the unit residual direction. Along this
family the two gains are g1(x) = a x + b sqrt(1-x^2) and g2(x) = c x with
(a, b, c) from the projection geometry, so the vector problem collapses to
a one-dimensional max-min over x with a three-case closed form:

  1. the g1/g2 crossing lies before g1's peak  -> take the peak of g1,
  2. the crossing lies at or after the peak    -> take the crossing,
  3. the lines never cross (g1 >= g2 on [0,1]) -> take x = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .model import ChannelRealization, EffectiveChannels, SystemConfig, effective_channels


class Case(enum.Enum):
    """Which branch of the closed form produced x_bar."""

    CROSS_BEFORE_PEAK = "CROSS_BEFORE_PEAK"  # c >= (a^2+b^2)/a
    CROSS_AFTER_PEAK = "CROSS_AFTER_PEAK"    # a <= c < (a^2+b^2)/a
    NO_CROSS = "NO_CROSS"                    # c < a


@dataclass(eq=False)
class BeamformerSolution:
    """Unit-norm beamformer with its combining coefficient and max-min gain.

    z_m is the achieved min(|w^T heff1|^2, |w^T heff2|^2). case is None for
    beamformers (like the benchmark) not produced by the closed form.
    """

    w: np.ndarray
    x_bar: float
    z_m: float
    case: Case | None = None


@dataclass(eq=False)
class OracleSearchResult:
    """Best min-gain found by exhaustive subspace search plus the best
    min-gain among random full-space unit vectors."""

    z_best: float
    w_best: np.ndarray
    z_random_best: float


def gain_pair(x: float, a: float, b: float, c: float) -> tuple[float, float]:
    """(g1, g2) = (a x + b sqrt(1-x^2), c x) at combining coefficient x."""
    return a * x + b * math.sqrt(max(0.0, 1.0 - x * x)), c * x


def optimal_x(a: float, b: float, c: float) -> tuple[float, Case]:
    """Maximize min(a x + b sqrt(1-x^2), c x) over x in [0, 1].

    The threshold (a^2+b^2)/a separating cases 1 and 2 is taken as +inf
    when a = 0, which routes orthogonal channels to the crossing case.
    """
    if a < 0 or b < 0 or c < 0:
        raise DomainError(f"a, b, c must be nonnegative, got ({a}, {b}, {c})")
    if a + b <= 0:
        raise DomainError("a + b must be positive (heff1 nonzero)")

    if c < a:
        return 1.0, Case.NO_CROSS
    threshold = (a * a + b * b) / a if a > 0 else math.inf
    if c >= threshold:
        return a / math.hypot(a, b), Case.CROSS_BEFORE_PEAK
    return b / math.hypot(a - c, b), Case.CROSS_AFTER_PEAK


def _achieved(w: np.ndarray, eff: EffectiveChannels) -> float:
    g1 = abs(np.dot(w, eff.heff1)) ** 2
    g2 = abs(np.dot(w, eff.heff2)) ** 2
    return float(min(g1, g2))


def _phase_align(w: np.ndarray, heff2: np.ndarray) -> np.ndarray:
    # global phase chosen so w^T heff2 is real nonnegative (g2 = c x with
    # real c, as in the x-parameterization); gains are phase invariant
    ph = np.dot(w, heff2)
    if abs(ph) > 0:
        w = w * (ph.conjugate() / abs(ph))
    return w


def optimal_beamformer(eff: EffectiveChannels) -> BeamformerSolution:
    """Compose the max-min optimal unit-norm beamformer from the projection
    geometry of the effective channels.

    Degenerate directions are removable: at a = 0 the parallel direction is
    taken along conj(heff2) (same span, recovers the crossing solution) and
    at b = 0 the residual direction carries coefficient 0 and is dropped.
    """
    a, b, c = eff.a, eff.b, eff.c
    x_bar, case = optimal_x(a, b, c)

    n2 = float(np.linalg.norm(eff.heff2))
    coeff = np.vdot(eff.heff2, eff.heff1) / (n2 * n2)
    par = coeff * eff.heff2

    u_par = np.conj(par) / a if a > 0 else np.conj(eff.heff2) / n2
    if b > 0:
        u_perp = np.conj(eff.heff1 - par) / b
        w = x_bar * u_par + math.sqrt(max(0.0, 1.0 - x_bar**2)) * u_perp
    else:
        w = x_bar * u_par

    w = w / np.linalg.norm(w)
    w = _phase_align(w, eff.heff2)
    return BeamformerSolution(w=w, x_bar=x_bar, z_m=_achieved(w, eff), case=case)


def benchmark_beamformer(
    cfg: SystemConfig, ch: ChannelRealization, eff: EffectiveChannels | None = None
) -> BeamformerSolution:
    """Large-N heuristic combining both channel directions with cross-link
    weights:

        w ~ |f2|/sqrt(d2^a d4^a) conj(h1)/||h1||
          + |f1|/sqrt(d1^a d3^a) conj(h2)/||h2||

    The closed normalizer sqrt(|f2|^2/(d2^a d4^a) + |f1|^2/(d1^a d3^a)) is
    exact only for orthogonal h1, h2, so the vector is renormalized to unit
    norm at finite N to keep the power constraint feasible. Asymptotically
    optimal as the antenna count grows.
    """
    if eff is None:
        eff = effective_channels(cfg, ch)
    a_exp = cfg.alpha
    k1 = abs(ch.f2) / math.sqrt(cfg.d2**a_exp * cfg.d4**a_exp)
    k2 = abs(ch.f1) / math.sqrt(cfg.d1**a_exp * cfg.d3**a_exp)
    norm1 = float(np.linalg.norm(ch.h1))
    norm2 = float(np.linalg.norm(ch.h2))
    if k1 * k2 == 0 or norm1 == 0 or norm2 == 0:
        raise DomainError("benchmark beamformer undefined on degenerate channels")
    w = k1 * np.conj(ch.h1) / norm1 + k2 * np.conj(ch.h2) / norm2
    w = w / math.sqrt(k1 * k1 + k2 * k2)
    # the closed normalizer is exact only for orthogonal h1, h2
    nrm = float(np.linalg.norm(w))
    if nrm == 0:
        raise DomainError("benchmark beamformer collapsed to zero (antiparallel channels)")
    w = w / nrm

    # parallel-component magnitude in the two-direction parameterization
    x_bench = min(1.0, abs(np.dot(w, eff.heff2)) / eff.c)
    return BeamformerSolution(w=w, x_bar=x_bench, z_m=_achieved(w, eff), case=None)


def _subspace_basis(eff: EffectiveChannels) -> tuple[np.ndarray, np.ndarray | None]:
    # orthonormal basis of span(conj(heff1), conj(heff2)) by Gram-Schmidt
    v1 = np.conj(eff.heff1)
    v2 = np.conj(eff.heff2)
    u1 = v1 / np.linalg.norm(v1)
    resid = v2 - np.vdot(u1, v2) * u1
    rn = float(np.linalg.norm(resid))
    if rn <= 1e-12 * float(np.linalg.norm(v2)):
        return u1, None
    return u1, resid / rn


def oracle_beamformer_search(
    eff: EffectiveChannels,
    grid_theta: int = 1024,
    grid_phi: int = 1024,
    n_random: int = 1000,
    seed: int = 0,
) -> OracleSearchResult:
    """Brute-force certificate for the closed form.

    Sweeps w = cos(theta) u1 + sin(theta) e^{i phi} u2 over an orthonormal
    basis (u1, u2) of the two-channel subspace (all unit vectors there, up
    to global phase), and additionally evaluates random unit vectors drawn
    in the full N-dimensional space; neither may beat the closed form
    beyond grid resolution.
    """
    if grid_theta < 64 or grid_phi < 64:
        raise DomainError("grids must be >= 64")

    u1, u2 = _subspace_basis(eff)
    if u2 is None:
        w_best = u1
        z_best = _achieved(u1, eff)
    else:
        theta = np.linspace(0.0, np.pi / 2.0, grid_theta)[:, None]
        phase = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, grid_phi, endpoint=False))[None, :]
        ct, st = np.cos(theta), np.sin(theta)

        p1, q1 = np.dot(u1, eff.heff1), np.dot(u2, eff.heff1)
        p2, q2 = np.dot(u1, eff.heff2), np.dot(u2, eff.heff2)
        g1 = np.abs(ct * p1 + st * phase * q1) ** 2
        g2 = np.abs(ct * p2 + st * phase * q2) ** 2
        z = np.minimum(g1, g2)

        it, ip = np.unravel_index(int(np.argmax(z)), z.shape)
        z_best = float(z[it, ip])
        w_best = float(ct[it, 0]) * u1 + float(st[it, 0]) * phase[0, ip] * u2

    rng = np.random.default_rng(seed)
    n = eff.heff1.shape[0]
    samples = rng.standard_normal((n_random, n)) + 1j * rng.standard_normal((n_random, n))
    samples /= np.linalg.norm(samples, axis=1, keepdims=True)
    rg1 = np.abs(samples @ eff.heff1) ** 2
    rg2 = np.abs(samples @ eff.heff2) ** 2
    z_random_best = float(np.max(np.minimum(rg1, rg2)))

    return OracleSearchResult(z_best=z_best, w_best=w_best, z_random_best=z_random_best)
