"""Finite-SNR Monte Carlo cross-checks.

Samples channels, evaluates log-det Gaussian rates for point-to-point, MAC
and treat-interference-as-noise configurations, and estimates GDoF slopes
by a two-point secant over a wide SNR ladder.  All randomness comes from
the counter-based Philox generator with explicit seeds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np

from .hk_scheme import ChannelInstance

SeedLike = Union[int, Tuple[int, ...]]

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class SnrLadder:
    """Ascending nominal SNR values, widely separated so secant slopes are
    meaningful (adjacent points at least 2 decades apart)."""

    rho_values: Tuple[float, ...] = (1e8, 1e12)

    def __post_init__(self):
        if len(self.rho_values) < 2:
            raise ValueError("ladder needs at least two SNR values")
        for lo, hi in zip(self.rho_values, self.rho_values[1:]):
            if not 0 < lo < hi:
                raise ValueError("ladder must be positive and ascending")
            if math.log10(hi) - math.log10(lo) < 2:
                raise ValueError("adjacent ladder points must be >= 2 decades apart")

    @property
    def lo(self) -> float:
        return self.rho_values[0]

    @property
    def hi(self) -> float:
        return self.rho_values[-1]


@dataclass(frozen=True)
class SlopeEstimate:
    """A GDoF slope estimate averaged over independent channel draws."""

    value: float
    per_draw_spread: float
    draws: int


def sample_channel(rows: int, cols: int, seed: SeedLike) -> np.ndarray:
    """An i.i.d. CN(0, 1) matrix, deterministic in the seed."""
    if rows < 1 or cols < 1:
        raise ValueError(f"matrix shape ({rows}, {cols}) must be positive")
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    re = rng.standard_normal((rows, cols))
    im = rng.standard_normal((rows, cols))
    return (re + 1j * im) / np.sqrt(2.0)


def _log2det_hermitian(a: np.ndarray) -> float:
    sign, logdet = np.linalg.slogdet(a)
    return float(logdet) / LOG2


def p2p_rate(h: np.ndarray, q: np.ndarray, snr: float) -> float:
    """log2 det(I + snr * H Q H^H) for a PSD input covariance Q."""
    if snr < 0:
        raise ValueError(f"snr={snr} must be nonnegative")
    if q.shape != (h.shape[1], h.shape[1]):
        raise ValueError(f"Q shape {q.shape} does not match H columns {h.shape[1]}")
    eigs = np.linalg.eigvalsh((q + q.conj().T) / 2)
    scale = max(abs(eigs[-1]), 1.0)
    if not np.allclose(q, q.conj().T) or eigs[0] < -1e-10 * scale:
        raise ValueError("input covariance must be Hermitian PSD")
    n = h.shape[0]
    return _log2det_hermitian(np.eye(n) + snr * (h @ q @ h.conj().T))


def mac_sum_rate(
    receiver_dims: int,
    users: Sequence[Tuple[np.ndarray, int, Fraction]],
    rho: float,
) -> float:
    """Sum rate log2 det(I + sum_k rho^a_k H_k H_k^H / M_k) of a MAC with
    white per-user inputs; each user is (H, M, exponent)."""
    if len(users) not in (2, 3):
        raise ValueError(f"expected 2 or 3 MAC users, got {len(users)}")
    acc = np.eye(receiver_dims, dtype=complex)
    for h, m, a in users:
        if h.shape != (receiver_dims, m):
            raise ValueError(
                f"user matrix shape {h.shape} != ({receiver_dims}, {m})"
            )
        acc += (rho ** float(a) / m) * (h @ h.conj().T)
    return _log2det_hermitian(acc)


def tin_rates(inst: ChannelInstance, rho: float) -> Tuple[float, float]:
    """Per-user rates when each receiver treats interference as noise,
    with white inputs Q = I/M on both sides."""
    a = inst.exp

    def one_side(h_dir, h_int, a_dir, a_int, m_dir, m_int, n):
        signal = (rho ** float(a_dir) / m_dir) * (h_dir @ h_dir.conj().T)
        noise = np.eye(n) + (rho ** float(a_int) / m_int) * (h_int @ h_int.conj().T)
        return _log2det_hermitian(noise + signal) - _log2det_hermitian(noise)

    m1, m2 = inst.h11.shape[1], inst.h22.shape[1]
    n1, n2 = inst.h11.shape[0], inst.h22.shape[0]
    r1 = one_side(inst.h11, inst.h21, a.a11, a.a21, m1, m2, n1)
    r2 = one_side(inst.h22, inst.h12, a.a22, a.a12, m2, m1, n2)
    return r1, r2


RateFn = Callable[[float, int], float]


def estimate_slope(
    rate_fn: RateFn,
    ladder: SnrLadder,
    draws: int = 5,
    seed: int = 0,
) -> SlopeEstimate:
    """Two-point secant estimate of the GDoF slope, averaged over draws.

    ``rate_fn(rho, draw_seed)`` must be deterministic in its arguments and
    reuse the same channel realization for both ladder endpoints of a draw.
    """
    if draws < 1:
        raise ValueError(f"draws={draws} must be >= 1")
    denom = math.log2(ladder.hi) - math.log2(ladder.lo)
    slopes: List[float] = []
    for d in range(draws):
        draw_seed = seed + d
        r_lo = rate_fn(ladder.lo, draw_seed)
        r_hi = rate_fn(ladder.hi, draw_seed)
        slopes.append((r_hi - r_lo) / denom)
    value = math.fsum(slopes) / draws
    spread = max(slopes) - min(slopes)
    return SlopeEstimate(value, spread, draws)


def mac_slope(
    receiver_dims: int,
    user_dims: Sequence[Tuple[int, Fraction]],
    ladder: SnrLadder = SnrLadder(),
    draws: int = 5,
    seed: int = 0,
) -> SlopeEstimate:
    """Estimated sum-GDoF slope of a MAC with the given (antennas, exponent)
    users; the Monte Carlo counterpart of the allocation functions f and g."""

    def rate(rho: float, draw_seed: int) -> float:
        users = [
            (sample_channel(receiver_dims, m, (draw_seed, k)), m, a)
            for k, (m, a) in enumerate(user_dims)
        ]
        return mac_sum_rate(receiver_dims, users, rho)

    return estimate_slope(rate, ladder, draws, seed)


def tin_slopes(
    ant,
    exp,
    ladder: SnrLadder = SnrLadder(),
    draws: int = 5,
    seed: int = 0,
) -> Tuple[SlopeEstimate, SlopeEstimate]:
    """Estimated per-user GDoF of the treat-interference-as-noise baseline."""
    from .hk_scheme import sample_instance

    def rate_for(user: int) -> RateFn:
        def rate(rho: float, draw_seed: int) -> float:
            inst = sample_instance(ant, exp, rho_ref=rho, seed=draw_seed)
            r1, r2 = tin_rates(inst, rho)
            return r1 if user == 1 else r2

        return rate

    return (
        estimate_slope(rate_for(1), ladder, draws, seed),
        estimate_slope(rate_for(2), ladder, draws, seed),
    )
