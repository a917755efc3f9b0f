"""Lower convex hulls of exact valuation data."""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import INF
from .errors import EmptyInput


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple  # ((x, y), ...) with x int, y Fraction

    @property
    def segments(self):
        """``(slope, horizontal length)`` per edge, left to right."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
        return out

    @property
    def slopes(self):
        """Flat slope multiset in non-decreasing order."""
        out = []
        for s, n in self.segments:
            out.extend([s] * n)
        return out

    def slope_counts(self):
        return sorted(Counter(self.slopes).items())

    @property
    def width(self):
        return self.vertices[-1][0] - self.vertices[0][0]

    def y_at(self, x):
        """Height of the polygon above abscissa ``x``."""
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x0 <= x <= x1:
                return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
        if len(self.vertices) == 1 and x == self.vertices[0][0]:
            return self.vertices[0][1]
        raise ValueError(f"{x} outside polygon")

    def drop_slope(self, value, count=1):
        """Polygon with ``count`` copies of slope ``value`` removed."""
        sl = self.slopes
        for _ in range(count):
            sl.remove(value)
        return from_slopes(sl, self.vertices[0])


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(valuations):
    """Lower convex hull of ``(i, valuations[i])``; INF/None entries are skipped."""
    pts = [(i, Fraction(v)) for i, v in enumerate(valuations) if v is not INF and v is not None]
    if not pts:
        raise EmptyInput("no finite valuations")
    hull = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull))


def from_slopes(slopes, start=(0, Fraction(0))):
    """Polygon with the given slope multiset (sorted internally)."""
    x, y = start
    verts = [(x, Fraction(y))]
    for s, n in sorted(Counter(Fraction(s) for s in slopes).items()):
        x += n
        y += s * n
        verts.append((x, y))
    return NewtonPolygon(tuple(verts))
