"""Minimal deterministic SVG 1.1 emission for region polygons and sweep
curves.  Plots are derived views: the exact rational coordinates ride along
in data attributes, so the SVG never becomes the source of truth."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

Point = Tuple[Fraction, Fraction]

_W, _H = 480, 480
_MARGIN = 50


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def _scale(points: Sequence[Point]):
    xmax = max((float(p[0]) for p in points), default=1.0)
    ymax = max((float(p[1]) for p in points), default=1.0)
    xmax = max(xmax, 1e-9)
    ymax = max(ymax, 1e-9)
    sx = (_W - 2 * _MARGIN) / xmax
    sy = (_H - 2 * _MARGIN) / ymax

    def to_px(p: Point) -> Tuple[float, float]:
        return (_MARGIN + float(p[0]) * sx, _H - _MARGIN - float(p[1]) * sy)

    return to_px


def _header(title: str) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">\n'
        f"  <title>{title}</title>\n"
        f'  <rect width="{_W}" height="{_H}" fill="white"/>\n'
    )


def _axes(xlabel: str, ylabel: str) -> str:
    x0, y0 = _MARGIN, _H - _MARGIN
    return (
        f'  <line x1="{x0}" y1="{y0}" x2="{_W - _MARGIN}" y2="{y0}" stroke="black"/>\n'
        f'  <line x1="{x0}" y1="{y0}" x2="{x0}" y2="{_MARGIN}" stroke="black"/>\n'
        f'  <text x="{_W // 2}" y="{_H - 12}" text-anchor="middle" '
        f'font-size="14">{xlabel}</text>\n'
        f'  <text x="14" y="{_H // 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 14 {_H // 2})">{ylabel}</text>\n'
    )


def region_svg(vertices: Sequence[Point], title: str) -> str:
    """A filled region polygon with exact vertices in data-vertices."""
    to_px = _scale(vertices)
    px = " ".join("{},{}".format(*map(_fmt, to_px(p))) for p in vertices)
    exact = " ".join(f"{p[0]},{p[1]}" for p in vertices)
    parts = [_header(title), _axes("d1", "d2")]
    parts.append(
        f'  <polygon points="{px}" data-vertices="{exact}" '
        'fill="#9ecae1" fill-opacity="0.6" stroke="#08519c" stroke-width="1.5"/>\n'
    )
    for p in vertices:
        x, y = to_px(p)
        parts.append(
            f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#08519c" '
            f'data-point="{p[0]},{p[1]}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def curve_svg(
    points: Sequence[Point],
    title: str,
    breakpoints: Sequence[Fraction] = (),
) -> str:
    """A symmetric-GDoF curve with exact samples in data-points."""
    to_px = _scale(points)
    px = " ".join("{},{}".format(*map(_fmt, to_px(p))) for p in points)
    exact = " ".join(f"{p[0]},{p[1]}" for p in points)
    parts = [_header(title), _axes("alpha", "d_sym")]
    parts.append(
        f'  <polyline points="{px}" data-points="{exact}" fill="none" '
        'stroke="#08519c" stroke-width="1.5"/>\n'
    )
    lookup = {p[0]: p[1] for p in points}
    for a in breakpoints:
        x, y = to_px((a, lookup[a]))
        parts.append(
            f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="#cb181d" '
            f'data-breakpoint="{a}"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)
