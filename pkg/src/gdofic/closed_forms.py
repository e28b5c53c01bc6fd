"""Closed-form symmetric-GDoF curves and scheme baselines.

The curves here are the independent cross-checks for the seven-bound region:
the four-branch symmetric formula for M > N, the SISO "W" curve, the
(1,1,2,1) "V" curve, the single-user threshold alpha*, a regime classifier,
and two baselines (the DoF sum bound and a zero-forcing-only stream hull).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .core_math import RationalLike, ZERO, rat
from .region import (
    ONE,
    AntennaProfile,
    ExponentProfile,
    GdofBound,
    GdofRegion,
    build_region,
)

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


class RegimeLabel(enum.IntEnum):
    """Interference severity, ordered weakest to strongest."""

    very_weak = 0
    weak = 1
    moderate = 2
    strong = 3
    very_strong = 4


@dataclass(frozen=True)
class CurvePiece:
    alpha_lo: Fraction
    alpha_hi: Optional[Fraction]  # None = unbounded final piece
    slope: Fraction
    intercept: Fraction

    def value(self, alpha: Fraction) -> Fraction:
        return self.intercept + self.slope * alpha


@dataclass(frozen=True)
class SymmetricCurve:
    """A continuous piecewise-linear symmetric-GDoF curve."""

    pieces: Tuple[CurvePiece, ...]

    def __post_init__(self):
        prev = None
        for p in self.pieces:
            if p.alpha_hi is not None and not p.alpha_lo < p.alpha_hi:
                raise ValueError(f"empty piece [{p.alpha_lo}, {p.alpha_hi}]")
            if prev is not None:
                if prev.alpha_hi != p.alpha_lo:
                    raise ValueError("pieces are not contiguous")
                if prev.value(p.alpha_lo) != p.value(p.alpha_lo):
                    raise ValueError(f"discontinuity at alpha={p.alpha_lo}")
            prev = p

    def value(self, alpha: RationalLike) -> Fraction:
        a = rat(alpha)
        if a < self.pieces[0].alpha_lo:
            raise ValueError(f"alpha={a} below curve domain")
        for p in self.pieces:
            if p.alpha_hi is None or a <= p.alpha_hi:
                return p.value(a)
        raise ValueError(f"alpha={a} beyond curve domain")

    def breakpoints(self) -> Tuple[Fraction, ...]:
        return tuple(
            p.alpha_lo
            for prev, p in zip(self.pieces, self.pieces[1:])
            if prev.slope != p.slope
        )


def _branch_d(M: int, N: int, alpha: Fraction) -> Fraction:
    """The unclamped four-branch symmetric formula for M > N."""
    if alpha < HALF:
        return N - (2 * N - M) * alpha
    if alpha <= TWO_THIRDS:
        return (M - N) + (2 * N - M) * alpha
    if alpha <= 1:
        return N - alpha / 2 * (2 * N - M)
    return Fraction(M, 2) + Fraction(N, 2) * (alpha - 1)


def closed_form_d(M: int, N: int, alpha: RationalLike) -> Fraction:
    """Symmetric GDoF min{N, D(alpha)} of the (M,N,M,N) channel with M > N
    and exponents [1, alpha, alpha, 1].

    Only the M > N side is covered; for M < N use the reciprocity swap
    (evaluate with arguments (N, M) and clamp at M).
    """
    if not M > N >= 1:
        raise ValueError(
            f"closed_form_d needs M > N >= 1, got M={M}, N={N}; "
            "for M <= N swap the arguments per reciprocity"
        )
    a = rat(alpha)
    if a < 0:
        raise ValueError(f"alpha={a} must be nonnegative")
    return min(Fraction(N), _branch_d(M, N, a))


def siso_w_curve(alpha: RationalLike) -> Fraction:
    """The five-branch single-antenna "W" curve: 1-a, a, 1-a/2, a/2, then 1."""
    a = rat(alpha)
    if a < 0:
        raise ValueError(f"alpha={a} must be nonnegative")
    if a >= 2:
        return ONE
    return min(ONE, _branch_d(1, 1, a))


def curve_1121(alpha: RationalLike) -> Fraction:
    """The (1,1,2,1) symmetric "V" curve: 1-a/2, a/2, then 1."""
    a = rat(alpha)
    if a < 0:
        raise ValueError(f"alpha={a} must be nonnegative")
    if a <= 1:
        return 1 - a / 2
    if a <= 2:
        return a / 2
    return ONE


def siso_w_pieces() -> SymmetricCurve:
    """The W curve as an explicit piecewise-linear object."""
    return SymmetricCurve((
        CurvePiece(ZERO, HALF, Fraction(-1), ONE),
        CurvePiece(HALF, TWO_THIRDS, ONE, ZERO),
        CurvePiece(TWO_THIRDS, ONE, -HALF, ONE),
        CurvePiece(ONE, Fraction(2), HALF, ZERO),
        CurvePiece(Fraction(2), None, ZERO, ONE),
    ))


def curve_1121_pieces() -> SymmetricCurve:
    return SymmetricCurve((
        CurvePiece(ZERO, ONE, -HALF, ONE),
        CurvePiece(ONE, Fraction(2), HALF, ZERO),
        CurvePiece(Fraction(2), None, ZERO, ONE),
    ))


def alpha_star(M: int, N: int) -> Fraction:
    """Cross-link exponent above which both users get single-user GDoF on the
    (M,N,M,N) channel: 3 - M/N, for M >= N."""
    if not M >= N >= 1:
        raise ValueError(f"alpha_star needs M >= N >= 1, got M={M}, N={N}")
    return 3 - Fraction(M, N)


def classify_regime(M: int, N: int, alpha: RationalLike) -> RegimeLabel:
    """Label the interference regime of the symmetric (M,N,M,N) channel.

    Intervals are left-closed; when alpha* < 1 the strong interval (and any
    interval above alpha*) collapses into very_strong.
    """
    a = rat(alpha)
    if a < 0:
        raise ValueError(f"alpha={a} must be nonnegative")
    if a >= alpha_star(M, N):
        return RegimeLabel.very_strong
    if a >= 1:
        return RegimeLabel.strong
    if a >= TWO_THIRDS:
        return RegimeLabel.moderate
    if a >= HALF:
        return RegimeLabel.weak
    return RegimeLabel.very_weak


def dof_sum_bound(ant: AntennaProfile) -> Fraction:
    """The four-term DoF sum bound min{M1+M2, N1+N2, max(M1,N2), max(M2,N1)}."""
    m1, n1, m2, n2 = ant.as_tuple()
    return Fraction(min(m1 + m2, n1 + n2, max(m1, n2), max(m2, n1)))


def dof_region(ant: AntennaProfile) -> GdofRegion:
    """The three-inequality DoF region (oracle for the all-ones exponent case)."""
    bounds = [
        GdofBound("D1", ONE, ZERO, Fraction(min(ant.m1, ant.n1))),
        GdofBound("D2", ZERO, ONE, Fraction(min(ant.m2, ant.n2))),
        GdofBound("SUM", ONE, ONE, dof_sum_bound(ant)),
    ]
    return build_region(bounds)


def zf_only_region(ant: AntennaProfile, exp: ExponentProfile) -> GdofRegion:
    """GDoF hull of pure transmit/receive zero-forcing stream allocations.

    Modeled as the stream-counting DoF region: integer pairs (s1, s2) with
    s_i at most min(M_i, N_i) and, whenever a cross link actually carries
    interference (positive exponent), s1 + s2 at most the DoF sum bound.
    Each stream earns its user's full direct-link GDoF, so the hull lives in
    the same (d1, d2) coordinates as the fundamental region.  This is a
    model of the baseline scheme, not a closed form from the bound set.
    """
    bounds: List[GdofBound] = [
        GdofBound("S1", ONE, ZERO, Fraction(min(ant.m1, ant.n1))),
        GdofBound("S2", ZERO, ONE, Fraction(min(ant.m2, ant.n2))),
    ]
    if exp.a12 > 0 or exp.a21 > 0:
        bounds.append(GdofBound("SUM", ONE, ONE, dof_sum_bound(ant)))
    return build_region(bounds)
