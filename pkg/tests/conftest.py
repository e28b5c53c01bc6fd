from fractions import Fraction
from typing import Sequence, Tuple

Point = Tuple[Fraction, Fraction]


def polygon_contains(vertices: Sequence[Point], p: Point) -> bool:
    """Exact membership in a convex polygon given counterclockwise vertices
    (boundary inclusive).  Independent of the halfplane bound list."""
    n = len(vertices)
    if n == 1:
        return p == vertices[0]
    if n == 2:
        (ax, ay), (bx, by) = vertices
        cross = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
        if cross != 0:
            return False
        dot = (p[0] - ax) * (bx - ax) + (p[1] - ay) * (by - ay)
        return 0 <= dot <= (bx - ax) ** 2 + (by - ay) ** 2
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        if (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax) < 0:
            return False
    return True


def frac_grid(lo: Fraction, hi: Fraction, step: Fraction):
    out = []
    a = lo
    while a <= hi:
        out.append(a)
        a += step
    return out
