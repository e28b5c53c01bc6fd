"""Exact rational arithmetic and the two MAC sum-GDoF allocation functions.

Everything downstream (region bounds, closed-form curves, the split solver)
is assembled from the two piecewise-linear functions ``f`` and ``g`` defined
here.  They allocate ``u`` receive dimensions greedily to transmit-dimension
blocks, serving the block with the largest SNR exponent first.  All values
are exact :class:`fractions.Fraction`; no floating point enters this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Tuple, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or string like ``"2/3"`` / ``"0.25"`` to an
    exact Fraction.  Floats are rejected to keep the core exact."""
    if isinstance(x, float):
        raise TypeError(
            f"refusing float {x!r}: pass a string or Fraction for exactness"
        )
    return Fraction(x)


class WeightedDim(NamedTuple):
    """A (SNR exponent, dimension count) pair."""

    a: Fraction
    u: int


PairLike = Union[WeightedDim, Tuple[RationalLike, int]]


def _pair(p: PairLike) -> Tuple[Fraction, int]:
    a, u = p
    a = rat(a)
    if a < 0:
        raise ValueError(f"exponent must be nonnegative, got {a}")
    if u < 0:
        raise ValueError(f"dimension count must be nonnegative, got {u}")
    return a, u


def pos_part(x: RationalLike) -> Fraction:
    """The clamp (x)^+ = max(x, 0)."""
    x = rat(x)
    return x if x > 0 else ZERO


def f(u: int, p1: PairLike, p2: PairLike) -> Fraction:
    """Sum GDoF of a 2-user MAC with ``u`` receive dimensions.

    The block with the larger exponent is served first; the other block
    gets whatever dimensions remain.  Symmetric in the two pairs.
    """
    if u < 0:
        raise ValueError(f"receive dimensions must be nonnegative, got {u}")
    (a1, u1), (a2, u2) = _pair(p1), _pair(p2)
    if a1 < a2:
        (a1, u1), (a2, u2) = (a2, u2), (a1, u1)
    return a1 * min(u, u1) + a2 * min(pos_part(u - u1), u2)


def g(u: int, t1: PairLike, t2: PairLike, t3: PairLike) -> Fraction:
    """Sum GDoF of a 3-user MAC with ``u`` receive dimensions.

    Pairs are served in descending exponent order (stable in the argument
    order on ties); each block consumes its full dimension count from the
    residual whether or not it was fully served.
    """
    if u < 0:
        raise ValueError(f"receive dimensions must be nonnegative, got {u}")
    pairs = sorted((_pair(t1), _pair(t2), _pair(t3)),
                   key=lambda p: p[0], reverse=True)
    total = ZERO
    used = 0
    for a, ui in pairs:
        total += a * min(pos_part(u - used), ui)
        used += ui
    return total
