"""Exact planar primitives.

All coordinates are ``fractions.Fraction``; every predicate in the
package is decided by exact rational arithmetic, never by epsilon
comparisons.  Obstacle vertices are integers in practice, but skeleton
edges and frontier endpoints pick up rational coordinates, so the
shared primitive layer works over Q from the start.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Union

Coord = Union[int, Fraction]


def _frac(v) -> Fraction:
    if type(v) is Fraction:
        return v
    return Fraction(v)


class _PointBase(NamedTuple):
    x: Fraction
    y: Fraction


class Point(_PointBase):
    __slots__ = ()

    def __new__(cls, x, y):
        return super().__new__(cls, _frac(x), _frac(y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


class _SegmentBase(NamedTuple):
    a: Point
    b: Point


class Segment(_SegmentBase):
    """Closed segment between two distinct points."""

    __slots__ = ()

    def __new__(cls, a, b):
        pa = a if isinstance(a, Point) else Point(*a)
        pb = b if isinstance(b, Point) else Point(*b)
        if pa == pb:
            raise ValueError(f"degenerate segment at {pa}")
        return super().__new__(cls, pa, pb)

    def canonical(self) -> "Segment":
        """Endpoints ordered lexicographically; use for dedup/compare."""
        return self if self.a <= self.b else Segment(self.b, self.a)

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    @property
    def is_vertical(self) -> bool:
        return self.a.x == self.b.x

    @property
    def is_horizontal(self) -> bool:
        return self.a.y == self.b.y

    def length_sq(self) -> Fraction:
        dx = self.b.x - self.a.x
        dy = self.b.y - self.a.y
        return dx * dx + dy * dy

    def __str__(self) -> str:
        return f"{self.a}-{self.b}"


class Box(NamedTuple):
    """Closed axis-aligned box given by opposite corners."""

    lo: Point
    hi: Point

    @property
    def width(self) -> Fraction:
        return self.hi.x - self.lo.x

    @property
    def height(self) -> Fraction:
        return self.hi.y - self.lo.y

    def contains(self, p: Point) -> bool:
        return self.lo.x <= p.x <= self.hi.x and self.lo.y <= p.y <= self.hi.y


def bbox(items: Iterable) -> Box:
    """Bounding box of points and/or segments.

    Raises ``ValueError("empty geometry")`` when nothing is supplied.
    """
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    for it in items:
        if isinstance(it, Segment):
            xs.extend((it.a.x, it.b.x))
            ys.extend((it.a.y, it.b.y))
        else:
            p = it if isinstance(it, Point) else Point(*it)
            xs.append(p.x)
            ys.append(p.y)
    if not xs:
        raise ValueError("empty geometry")
    return Box(Point(min(xs), min(ys)), Point(max(xs), max(ys)))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Cross product of (a - o) x (b - o)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(o: Point, a: Point, b: Point) -> int:
    """+1 counterclockwise, -1 clockwise, 0 collinear."""
    c = cross(o, a, b)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def point_on_segment(p: Point, s: Segment) -> bool:
    if cross(s.a, s.b, p) != 0:
        return False
    return (min(s.a.x, s.b.x) <= p.x <= max(s.a.x, s.b.x)
            and min(s.a.y, s.b.y) <= p.y <= max(s.a.y, s.b.y))


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True when the closed segments share at least one point."""
    if (max(s1.a.x, s1.b.x) < min(s2.a.x, s2.b.x)
            or max(s2.a.x, s2.b.x) < min(s1.a.x, s1.b.x)
            or max(s1.a.y, s1.b.y) < min(s2.a.y, s2.b.y)
            or max(s2.a.y, s2.b.y) < min(s1.a.y, s1.b.y)):
        return False
    d1 = orientation(s2.a, s2.b, s1.a)
    d2 = orientation(s2.a, s2.b, s1.b)
    d3 = orientation(s1.a, s1.b, s2.a)
    d4 = orientation(s1.a, s1.b, s2.b)
    if d1 != d2 and d3 != d4 and (d1 != 0 or d2 != 0) and (d3 != 0 or d4 != 0):
        return True
    if d1 == 0 and point_on_segment(s1.a, s2):
        return True
    if d2 == 0 and point_on_segment(s1.b, s2):
        return True
    if d3 == 0 and point_on_segment(s2.a, s1):
        return True
    if d4 == 0 and point_on_segment(s2.b, s1):
        return True
    return False


def segment_intersection_point(s1: Segment, s2: Segment) -> Point | None:
    """A common point of two intersecting segments, None if disjoint.

    For properly crossing segments this is the unique crossing; for
    touching or overlapping ones it is some shared point.
    """
    p, r_ = s1.a, s1.b
    q, s_ = s2.a, s2.b
    rx, ry = r_.x - p.x, r_.y - p.y
    sx, sy = s_.x - q.x, s_.y - q.y
    denom = rx * sy - ry * sx
    qpx, qpy = q.x - p.x, q.y - p.y
    if denom != 0:
        t = (qpx * sy - qpy * sx) / denom
        u = (qpx * ry - qpy * rx) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            return Point(p.x + t * rx, p.y + t * ry)
        return None
    # Parallel: either disjoint or collinear with a shared stretch.
    if qpx * ry - qpy * rx != 0:
        return None
    for cand in (s1.a, s1.b, s2.a, s2.b):
        if point_on_segment(cand, s1) and point_on_segment(cand, s2):
            return cand
    return None


def line_y_at(s: Segment, x: Fraction) -> Fraction:
    """y of the supporting line of a non-vertical segment at x."""
    dx = s.b.x - s.a.x
    if dx == 0:
        raise ValueError("vertical segment has no y(x)")
    return s.a.y + (s.b.y - s.a.y) * (x - s.a.x) / dx

def line_x_at(s: Segment, y: Fraction) -> Fraction:
    dy = s.b.y - s.a.y
    if dy == 0:
        raise ValueError("horizontal segment has no x(y)")
    return s.a.x + (s.b.x - s.a.x) * (y - s.a.y) / dy


# -- interval helpers (projection coverage accounting) ----------------

def interval_union_length_outside(lo: Fraction, hi: Fraction,
                                  cov: tuple[Fraction, Fraction] | None) -> Fraction:
    """Length of [lo, hi] not covered by the interval ``cov``."""
    if hi < lo:
        lo, hi = hi, lo
    if cov is None:
        return hi - lo
    clo, chi = cov
    left = min(hi, clo) - lo
    right = hi - max(lo, chi)
    total = Fraction(0)
    if left > 0:
        total += left
    if right > 0:
        total += right
    return total


def merge_interval(cov: tuple[Fraction, Fraction] | None,
                   lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if hi < lo:
        lo, hi = hi, lo
    if cov is None:
        return (lo, hi)
    return (min(cov[0], lo), max(cov[1], hi))
