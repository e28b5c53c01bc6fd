"""The rate-splitting superposition scheme: covariance split, stream
decomposition, and an exact private/public GDoF split solver.

The covariance machinery is double-precision complex linear algebra on
sampled channels; the split solver stays in exact rationals.  The boundary
between the two worlds is :class:`ChannelInstance`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .core_math import ZERO, f, g, pos_part, rat
from .region import AntennaProfile, ExponentProfile, Point

COND_THRESHOLD = 1e10


class RankDeficientChannel(ValueError):
    """A sampled cross-link matrix is numerically rank deficient."""


class SplitInfeasible(RuntimeError):
    """No private/public split satisfies the reconstructed constraint set."""

    def __init__(self, point: Point, constraints: List[Tuple[str, str]]):
        self.point = point
        self.constraints = constraints
        detail = "; ".join(f"{name}: {desc}" for name, desc in constraints)
        super().__init__(
            f"no feasible (d1p, d2p) for point {point}: {detail}"
        )


@dataclass(frozen=True)
class ChannelInstance:
    """One sampled channel realization at a nominal SNR.

    h_ij is the N_j x M_i matrix of the Tx_i -> Rx_j link; rho_ref is the
    nominal SNR rho, and each link operates at rho ** a_ij.
    """

    h11: np.ndarray
    h12: np.ndarray
    h21: np.ndarray
    h22: np.ndarray
    exp: ExponentProfile
    rho_ref: float

    def __post_init__(self):
        n1, m1 = self.h11.shape
        n2, m2 = self.h22.shape
        if self.h12.shape != (n2, m1) or self.h21.shape != (n1, m2):
            raise ValueError(
                f"inconsistent link shapes: h11 {self.h11.shape}, "
                f"h12 {self.h12.shape}, h21 {self.h21.shape}, h22 {self.h22.shape}"
            )
        if self.rho_ref <= 0:
            raise ValueError(f"rho_ref={self.rho_ref} must be positive")

    @property
    def antennas(self) -> AntennaProfile:
        return AntennaProfile(
            self.h11.shape[1], self.h11.shape[0],
            self.h22.shape[1], self.h22.shape[0],
        )

    def cross_link(self, user: int) -> Tuple[np.ndarray, float]:
        """The interfering matrix H_ij and its INR rho^a_ij for user i."""
        if user == 1:
            return self.h12, self.rho_ref ** float(self.exp.a12)
        if user == 2:
            return self.h21, self.rho_ref ** float(self.exp.a21)
        raise ValueError(f"user must be 1 or 2, got {user}")


@dataclass(frozen=True)
class CovariancePair:
    """Private (k_u) and public (k_w) input covariances, summing to I/M."""

    k_u: np.ndarray
    k_w: np.ndarray


@dataclass(frozen=True)
class Stream:
    """One transmit stream: unit direction, amplitude weight, and class."""

    direction: np.ndarray
    weight: float
    kind: str  # "public" | "private_below_noise" | "private_nullspace"


@dataclass(frozen=True)
class DofSplit:
    d1c: Fraction
    d1p: Fraction
    d2c: Fraction
    d2p: Fraction

    def as_tuple(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.d1c, self.d1p, self.d2c, self.d2p)


def covariances(inst: ChannelInstance, user: int) -> CovariancePair:
    """Private/public covariance split for the given user.

    k_u = (1/M) (I + rho_ij H_ij^H H_ij)^-1 keeps the private signal at or
    below the unintended receiver's noise floor; k_w is the remainder of the
    white power budget I/M.
    """
    h, rho_cross = inst.cross_link(user)
    m = h.shape[1]
    gram = np.eye(m, dtype=complex) + rho_cross * (h.conj().T @ h)
    k_u = np.linalg.inv(gram) / m
    k_w = np.eye(m) / m - k_u
    return CovariancePair(k_u, k_w)


def stream_decomposition(inst: ChannelInstance, user: int) -> List[Stream]:
    """Decompose the user's transmit signal into per-direction streams.

    Along each right singular vector of the cross link with eigenvalue
    lam_k, the private stream carries weight sqrt(1/G_k) with
    G_k = M (1 + rho_ij lam_k) and the public stream the remainder of the
    per-direction budget, sqrt(1/M - 1/G_k); the M - min(M, N_j) null-space
    directions are fully private at weight 1/sqrt(M).
    """
    h, rho_cross = inst.cross_link(user)
    nj, m = h.shape
    m_cross = min(m, nj)

    _, s, vh = np.linalg.svd(h, full_matrices=True)
    if s[m_cross - 1] <= 0 or s[0] / s[m_cross - 1] > COND_THRESHOLD:
        raise RankDeficientChannel(
            f"cross link of user {user} has condition number above "
            f"{COND_THRESHOLD:g}"
        )
    directions = vh.conj().T  # columns are right singular vectors, all M of them

    streams: List[Stream] = []
    for k in range(m_cross):
        lam = s[k] ** 2
        big_g = m * (1.0 + rho_cross * lam)
        streams.append(Stream(directions[:, k], np.sqrt(1.0 / m - 1.0 / big_g),
                              "public"))
    for k in range(m_cross):
        lam = s[k] ** 2
        big_g = m * (1.0 + rho_cross * lam)
        streams.append(Stream(directions[:, k], np.sqrt(1.0 / big_g),
                              "private_below_noise"))
    for k in range(m_cross, m):
        streams.append(Stream(directions[:, k], 1.0 / np.sqrt(m),
                              "private_nullspace"))
    return streams


def reconstructed_covariances(streams: List[Stream]) -> CovariancePair:
    """Sum the per-stream rank-one covariances back into (k_u, k_w)."""
    m = streams[0].direction.shape[0]
    k_u = np.zeros((m, m), dtype=complex)
    k_w = np.zeros((m, m), dtype=complex)
    for st in streams:
        outer = st.weight ** 2 * np.outer(st.direction, st.direction.conj())
        if st.kind == "public":
            k_w += outer
        else:
            k_u += outer
    return CovariancePair(k_u, k_w)


# -- exact split solver -------------------------------------------------------

Constraint = Tuple[Fraction, Fraction, Fraction, str]  # a*x + b*y <= c


def split_constraints(
    ant: AntennaProfile, exp: ExponentProfile, point: Point
) -> List[Constraint]:
    """Linear constraints on (x, y) = (d1p, d2p) for the target point.

    In base-rho units (user-i quantities scaled by a_ii), with the public
    parts d_ic = d_i - d_ip:
      C1: private power budget of each user;
      C2: each receiver decodes the interferer's public part as a MAC user;
      C4: own private plus interfering public share the receive space.
    (The joint bound with roles swapped coincides with C2 of the other user.)
    """
    m1, n1, m2, n2 = ant.as_tuple()
    a11, a12, a21, a22 = exp.as_tuple()
    d1, d2 = rat(point[0]), rat(point[1])
    b12 = pos_part(a11 - a12)
    b21 = pos_part(a22 - a21)
    m12, m21 = min(m1, n2), min(m2, n1)
    e1, e2 = int(pos_part(m1 - n2)), int(pos_part(m2 - n1))

    f1 = f(n1, (b12, m12), (a11, e1))        # C1 cap, user 1
    f2 = f(n2, (b21, m21), (a22, e2))        # C1 cap, user 2
    g1 = f(n2, (a12, m1), (a22, m2))         # MAC at Rx2
    g2 = f(n1, (a21, m2), (a11, m1))         # MAC at Rx1
    j1 = g(n1, (a21, m2), (b12, m12), (a11, e1))
    j2 = g(n2, (a12, m1), (b21, m21), (a22, e2))

    one = Fraction(1)
    return [
        (-one, ZERO, ZERO, "d1p >= 0"),
        (ZERO, -one, ZERO, "d2p >= 0"),
        (one, ZERO, d1, "d1p <= d1"),
        (ZERO, one, d2, "d2p <= d2"),
        (a11, ZERO, f1, "C1 user 1"),
        (ZERO, a22, f2, "C1 user 2"),
        (-a11, ZERO, g1 - a11 * d1 - a22 * d2, "C2 at Rx2"),
        (ZERO, -a22, g2 - a11 * d1 - a22 * d2, "C2 at Rx1"),
        (a11, -a22, j1 - a22 * d2, "C4 at Rx1"),
        (-a11, a22, j2 - a11 * d1, "C4 at Rx2"),
    ]


def _solve_box_slab(
    cons: List[Constraint],
) -> Optional[Tuple[Fraction, Fraction]]:
    """Maximize x + y (then x) over the constraint polygon, exactly.

    Axis-aligned constraints are folded into a box; the only remaining
    normals are +-(a11, -a22), a pair of parallel slab lines, so candidate
    optima are box corners plus slab-line / box-edge intersections.
    """
    xlo, xhi = None, None
    ylo, yhi = None, None
    diagonals: List[Constraint] = []
    for a, b, c, name in cons:
        if a == 0 and b == 0:
            if c < 0:
                return None
        elif b == 0:
            bound = c / a
            if a > 0:
                xhi = bound if xhi is None else min(xhi, bound)
            else:
                xlo = bound if xlo is None else max(xlo, bound)
        elif a == 0:
            bound = c / b
            if b > 0:
                yhi = bound if yhi is None else min(yhi, bound)
            else:
                ylo = bound if ylo is None else max(ylo, bound)
        else:
            diagonals.append((a, b, c, name))

    assert None not in (xlo, xhi, ylo, yhi)  # box always closed by d >= 0, d_ip <= d_i
    if xlo > xhi or ylo > yhi:
        return None

    candidates = [(xlo, ylo), (xlo, yhi), (xhi, ylo), (xhi, yhi)]
    for a, b, c, _ in diagonals:
        for x in (xlo, xhi):
            candidates.append((x, (c - a * x) / b))
        for y in (ylo, yhi):
            candidates.append(((c - b * y) / a, y))

    best: Optional[Tuple[Fraction, Fraction]] = None
    for x, y in candidates:
        if not (xlo <= x <= xhi and ylo <= y <= yhi):
            continue
        if any(a * x + b * y > c for a, b, c, _ in diagonals):
            continue
        if best is None or (x + y, x) > (best[0] + best[1], best[0]):
            best = (x, y)
    return best


def split_solver(
    ant: AntennaProfile, exp: ExponentProfile, point: Point
) -> DofSplit:
    """Find a private/public GDoF split achieving the given region point.

    Among all feasible splits the one with maximal total private GDoF is
    returned (ties broken toward user 1).  Raises SplitInfeasible when the
    reconstructed constraint set admits no split, listing the constraints.
    """
    d1, d2 = rat(point[0]), rat(point[1])
    if d1 < 0 or d2 < 0:
        raise ValueError(f"point {point} must be nonnegative")
    cons = split_constraints(ant, exp, (d1, d2))
    best = _solve_box_slab(cons)
    if best is None:
        described = [
            (name, f"{a}*d1p + {b}*d2p <= {c}") for a, b, c, name in cons
        ]
        raise SplitInfeasible((d1, d2), described)
    x, y = best
    return DofSplit(d1 - x, x, d2 - y, y)


def sample_instance(
    ant: AntennaProfile,
    exp: ExponentProfile,
    rho_ref: float,
    seed: int,
) -> ChannelInstance:
    """Draw one channel realization with i.i.d. CN(0,1) entries."""
    from .finite_snr import sample_channel

    return ChannelInstance(
        h11=sample_channel(ant.n1, ant.m1, (seed, 11)),
        h12=sample_channel(ant.n2, ant.m1, (seed, 12)),
        h21=sample_channel(ant.n1, ant.m2, (seed, 21)),
        h22=sample_channel(ant.n2, ant.m2, (seed, 22)),
        exp=exp,
        rho_ref=rho_ref,
    )
