"""Rectilinearly-convex obstacles: validation, features, classification.

An obstacle is a simple rectilinear polygon whose cyclic vertex x- and
y-sequences are both unimodal (rise once, fall once).  Equivalently,
every horizontal and every vertical line meets it in at most one
connected piece.  Validation normalizes the vertex cycle (counter-
clockwise, starting at the lexicographically smallest vertex) and
precomputes the structure everything else relies on: the four extreme
edges, the four boundary walks between them, reflex vertices, and the
lower/upper/left/right envelope plateaus.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .geom import Box, Point, Segment, bbox, cross

__all__ = [
    "Obstacle",
    "ObstacleInvalid",
    "ObstacleKind",
    "GeneralSubtype",
    "ObstacleClass",
    "Transform",
    "validate_obstacle",
    "classify",
    "canonicalize",
    "TRANSPOSE",
    "IDENTITY",
]


class ObstacleInvalid(ValueError):
    """Raised when a vertex list does not describe a valid obstacle."""

    def __init__(self, errors: list[str]):
        super().__init__("; ".join(errors))
        self.errors = errors


CORNER_NAMES = ("bl", "br", "tr", "tl")
EDGE_NAMES = ("left", "bottom", "right", "top")


class ObstacleKind(enum.Enum):
    RECTANGLE = "rectangle"
    L = "l"
    T = "t"
    STAIRCASE = "staircase"
    PARTIAL_STAIRCASE = "partial_staircase"
    GENERAL = "general"


class GeneralSubtype(enum.Enum):
    A = "a"  # both pairs of parallel extreme edges overlap
    B = "b"  # exactly one pair overlaps
    C = "c"  # neither overlaps, pair slopes differ
    D = "d"  # neither overlaps, pair slopes agree


@dataclass(frozen=True)
class ObstacleClass:
    kind: ObstacleKind
    subtype: Optional[GeneralSubtype]
    # Each end is a (vertical edge name, horizontal edge name) pair; the
    # end nearer the lexicographically smaller bounding-box corner first.
    ends: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class Transform:
    """Affine map (x, y) -> (m00*x + m01*y + tx, m10*x + m11*y + ty).

    Restricted in practice to the eight axis symmetries, so it maps
    obstacles to obstacles and axis-parallel edges to axis-parallel
    edges.  ``invert`` recovers original coordinates.
    """

    m00: Fraction
    m01: Fraction
    m10: Fraction
    m11: Fraction
    tx: Fraction
    ty: Fraction

    def apply(self, p: Point) -> Point:
        return Point(self.m00 * p.x + self.m01 * p.y + self.tx,
                     self.m10 * p.x + self.m11 * p.y + self.ty)

    def apply_segment(self, s: Segment) -> Segment:
        return Segment(self.apply(s.a), self.apply(s.b))

    def inverse(self) -> "Transform":
        det = self.m00 * self.m11 - self.m01 * self.m10
        i00 = self.m11 / det
        i01 = -self.m01 / det
        i10 = -self.m10 / det
        i11 = self.m00 / det
        return Transform(i00, i01, i10, i11,
                         -(i00 * self.tx + i01 * self.ty),
                         -(i10 * self.tx + i11 * self.ty))

    def invert(self, p: Point) -> Point:
        return self.inverse().apply(p)

    def compose(self, first: "Transform") -> "Transform":
        """Transform applying ``first`` and then ``self``."""
        return Transform(
            self.m00 * first.m00 + self.m01 * first.m10,
            self.m00 * first.m01 + self.m01 * first.m11,
            self.m10 * first.m00 + self.m11 * first.m10,
            self.m10 * first.m01 + self.m11 * first.m11,
            self.m00 * first.tx + self.m01 * first.ty + self.tx,
            self.m10 * first.tx + self.m11 * first.ty + self.ty,
        )


def _t(m00, m01, m10, m11, tx=0, ty=0) -> Transform:
    f = Fraction
    return Transform(f(m00), f(m01), f(m10), f(m11), f(tx), f(ty))


IDENTITY = _t(1, 0, 0, 1)
TRANSPOSE = _t(0, 1, 1, 0)


@dataclass(frozen=True)
class Obstacle:
    """Validated rectilinearly-convex polygon with derived structure.

    ``vertices`` run counterclockwise starting at the lexicographically
    smallest vertex.  Walk ``w1`` runs from the lower endpoint of the
    left extreme edge to the left endpoint of the bottom extreme edge
    (inclusive), ``w2`` bottom to right, ``w3`` right to top, ``w4`` top
    to left; shared endpoints are included, so a walk can be a single
    vertex.  Plateau tuples describe the four boundary envelopes:
    ``bottom_plateaus``/``top_plateaus`` hold (x0, x1, y) spans covering
    [x_min, x_max], ``left_plateaus``/``right_plateaus`` hold
    (y0, y1, x) spans covering [y_min, y_max].
    """

    vertices: tuple[Point, ...]
    box: Box
    extreme: dict[str, Segment]
    extreme_corners: tuple[str, ...]
    walks: dict[str, tuple[Point, ...]]
    reflex: dict[str, tuple[Point, ...]]
    bottom_plateaus: tuple[tuple[Fraction, Fraction, Fraction], ...]
    top_plateaus: tuple[tuple[Fraction, Fraction, Fraction], ...]
    left_plateaus: tuple[tuple[Fraction, Fraction, Fraction], ...]
    right_plateaus: tuple[tuple[Fraction, Fraction, Fraction], ...]
    _bot_starts: list = field(repr=False, default_factory=list)
    _top_starts: list = field(repr=False, default_factory=list)
    _left_starts: list = field(repr=False, default_factory=list)
    _right_starts: list = field(repr=False, default_factory=list)

    # -- basic accessors ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple[Segment, ...]:
        vs = self.vertices
        return tuple(Segment(vs[i], vs[(i + 1) % len(vs)])
                     for i in range(len(vs)))

    def corner_point(self, name: str) -> Point:
        lo, hi = self.box
        return {
            "bl": Point(lo.x, lo.y),
            "br": Point(hi.x, lo.y),
            "tr": Point(hi.x, hi.y),
            "tl": Point(lo.x, hi.y),
        }[name]

    def area2(self) -> Fraction:
        """Twice the signed area (positive; vertices are ccw)."""
        total = Fraction(0)
        vs = self.vertices
        for i in range(len(vs)):
            a, b = vs[i], vs[(i + 1) % len(vs)]
            total += a.x * b.y - b.x * a.y
        return total

    # -- envelope evaluation ---------------------------------------------

    def _env(self, plateaus, starts, coord, side: int) -> Fraction:
        """Plateau value at ``coord``; side -1 approaches from below,
        +1 from above, 0 either (coord assumed interior to a plateau)."""
        if side <= 0:
            i = bisect_left(starts, coord) - 1
            if i < 0:
                i = 0
        else:
            i = bisect_right(starts, coord) - 1
            if i >= len(plateaus):
                i = len(plateaus) - 1
        return plateaus[i][2]

    def bottom_at(self, x, side: int = 0) -> Fraction:
        return self._env(self.bottom_plateaus, self._bot_starts, x, side)

    def top_at(self, x, side: int = 0) -> Fraction:
        return self._env(self.top_plateaus, self._top_starts, x, side)

    def left_at(self, y, side: int = 0) -> Fraction:
        return self._env(self.left_plateaus, self._left_starts, y, side)

    def right_at(self, y, side: int = 0) -> Fraction:
        return self._env(self.right_plateaus, self._right_starts, y, side)

    def closed_slice_x(self, x) -> Optional[tuple[Fraction, Fraction]]:
        """The closed vertical slice {y : (x, y) in closed obstacle}."""
        lo, hi = self.box
        if x < lo.x or x > hi.x:
            return None
        cand_b = []
        cand_t = []
        if x > lo.x:
            cand_b.append(self.bottom_at(x, -1))
            cand_t.append(self.top_at(x, -1))
        if x < hi.x:
            cand_b.append(self.bottom_at(x, +1))
            cand_t.append(self.top_at(x, +1))
        return (min(cand_b), max(cand_t))

    def interior_slice_x(self, x) -> Optional[tuple[Fraction, Fraction]]:
        """Open interval {y : (x, y) interior}, or None when empty."""
        lo, hi = self.box
        if x <= lo.x or x >= hi.x:
            return None
        b = max(self.bottom_at(x, -1), self.bottom_at(x, +1))
        t = min(self.top_at(x, -1), self.top_at(x, +1))
        if b >= t:
            return None
        return (b, t)

    def closed_slice_y(self, y) -> Optional[tuple[Fraction, Fraction]]:
        """The closed horizontal slice {x : (x, y) in closed obstacle}."""
        lo, hi = self.box
        if y < lo.y or y > hi.y:
            return None
        cand_l = []
        cand_r = []
        if y > lo.y:
            cand_l.append(self.left_at(y, -1))
            cand_r.append(self.right_at(y, -1))
        if y < hi.y:
            cand_l.append(self.left_at(y, +1))
            cand_r.append(self.right_at(y, +1))
        return (min(cand_l), max(cand_r))

    def interior_slice_y(self, y) -> Optional[tuple[Fraction, Fraction]]:
        """Open interval {x : (x, y) interior}, or None when empty."""
        lo, hi = self.box
        if y <= lo.y or y >= hi.y:
            return None
        l = max(self.left_at(y, -1), self.left_at(y, +1))
        r = min(self.right_at(y, -1), self.right_at(y, +1))
        if l >= r:
            return None
        return (l, r)

    def point_in_closed(self, p: Point) -> bool:
        sl = self.closed_slice_x(p.x)
        return sl is not None and sl[0] <= p.y <= sl[1]

    def point_in_interior(self, p: Point) -> bool:
        sl = self.interior_slice_x(p.x)
        return sl is not None and sl[0] < p.y < sl[1]

    def point_on_boundary(self, p: Point) -> bool:
        return self.point_in_closed(p) and not self.point_in_interior(p)

    # -- containment of segments ------------------------------------------

    def _breaks_between(self, starts, x1, x2):
        """Interior plateau breaks a with x1 <= a <= x2 (starts[0] is
        x_min and never an interior break)."""
        i = bisect_left(starts, x1)
        if i == 0:
            i = 1
        j = bisect_right(starts, x2)
        return starts[i:j]

    def segment_in_obstacle(self, s: Segment) -> bool:
        """True when the closed segment lies in the closed obstacle."""
        if not (self.point_in_closed(s.a) and self.point_in_closed(s.b)):
            return False
        if s.is_vertical or s.is_horizontal:
            # Closed slices are intervals, so membership of both
            # endpoints already covers the whole segment.
            if s.is_vertical:
                return True
            y = s.a.y
            x1, x2 = sorted((s.a.x, s.b.x))
            for a in self._breaks_between(self._bot_starts, x1, x2):
                if (a > x1 and y < self.bottom_at(a, -1)) or \
                   (a < x2 and y < self.bottom_at(a, +1)):
                    return False
            for a in self._breaks_between(self._top_starts, x1, x2):
                if (a > x1 and y > self.top_at(a, -1)) or \
                   (a < x2 and y > self.top_at(a, +1)):
                    return False
            return True
        p, q = (s.a, s.b) if s.a.x < s.b.x else (s.b, s.a)
        slope = (q.y - p.y) / (q.x - p.x)

        def line_y(x):
            return p.y + slope * (x - p.x)

        # The line must clear every lower plateau from above and every
        # upper plateau from below; between breaks linearity makes the
        # break points the only places a new violation can start.  At a
        # break equal to a segment endpoint only the side the open
        # segment actually enters constrains it.
        for a in self._breaks_between(self._bot_starts, p.x, q.x):
            ya = line_y(a)
            if a > p.x and ya < self.bottom_at(a, -1):
                return False
            if a < q.x and ya < self.bottom_at(a, +1):
                return False
        for a in self._breaks_between(self._top_starts, p.x, q.x):
            ya = line_y(a)
            if a > p.x and ya > self.top_at(a, -1):
                return False
            if a < q.x and ya > self.top_at(a, +1):
                return False
        return True

    # -- interior crossings of axis-parallel probes -----------------------

    def hleg_hits_interior(self, y, x1, x2) -> bool:
        """Does the closed horizontal leg at height y over [x1, x2]
        contain an interior point of the obstacle?"""
        if x2 < x1:
            x1, x2 = x2, x1
        lo, hi = self.box
        u = max(x1, lo.x)
        v = min(x2, hi.x)
        if u > v:
            return False
        if u == v:
            return self.point_in_interior(Point(u, y))
        cuts = sorted(set(self._breaks_between(self._bot_starts, u, v))
                      | set(self._breaks_between(self._top_starts, u, v))
                      | {u, v})
        for k in range(len(cuts) - 1):
            a, b = cuts[k], cuts[k + 1]
            if a == b:
                continue
            if self.bottom_at(a, +1) < y < self.top_at(a, +1):
                return True
        return False

    def vleg_hits_interior(self, x, y1, y2) -> bool:
        if y2 < y1:
            y1, y2 = y2, y1
        sl = self.interior_slice_x(x)
        if sl is None:
            return False
        return y2 > sl[0] and y1 < sl[1]

    # -- ray exits ---------------------------------------------------------

    def exit_point(self, p: Point, d: tuple) -> Point:
        """Where the ray p + t*d (t >= 0) last touches the closed
        obstacle, assuming p itself is inside it.

        This is the first boundary crossing, not the last point on the
        ray inside the region: a ray can leave and re-enter the bounding
        box band of a rectilinearly-convex region, and only the first
        crossing is meaningful for extending visibility edges.
        """
        dx, dy = Fraction(d[0]), Fraction(d[1])
        lo, hi = self.box
        if dx == 0:
            sl = self.closed_slice_x(p.x)
            return Point(p.x, sl[1] if dy > 0 else sl[0])
        if dx < 0:
            refl = _t(-1, 0, 0, 1)
            q = self._mirror_x.exit_point(refl.apply(p), (-dx, dy))
            return refl.apply(q)
        slope = dy / dx

        def line_y(x):
            return p.y + slope * (x - p.x)

        cuts = sorted(set(self._breaks_between(self._bot_starts, p.x, hi.x))
                      | set(self._breaks_between(self._top_starts, p.x, hi.x))
                      | {hi.x})
        xcur = p.x
        for a in cuts:
            if a <= p.x:
                continue
            bv = self.bottom_at(xcur, +1)
            tv = self.top_at(xcur, +1)
            y_in = line_y(xcur)
            if y_in < bv or y_in > tv:
                return Point(xcur, y_in)
            y_out = line_y(a)
            if y_out < bv:
                return Point(xcur + (bv - y_in) / slope, bv)
            if y_out > tv:
                return Point(xcur + (tv - y_in) / slope, tv)
            xcur = a
        return Point(hi.x, line_y(hi.x))

    def extend_through(self, v_i: Point, v_j: Point) -> Segment:
        """Maximal containing segment of v_i v_j within the obstacle."""
        dxy = (v_j.x - v_i.x, v_j.y - v_i.y)
        far = self.exit_point(v_i, dxy)
        near = self.exit_point(v_j, (-dxy[0], -dxy[1]))
        return Segment(near, far)

    # -- transforms --------------------------------------------------------

    def transformed(self, t: Transform) -> "Obstacle":
        """Image under an axis symmetry.

        The image of a valid obstacle under any of the eight axis
        symmetries is valid, so this rebuilds the derived structure
        directly instead of revalidating; images are memoized per
        transform since the sweeps revisit them constantly.
        """
        cache = self.__dict__.setdefault("_images", {})
        ob = cache.get(t)
        if ob is None:
            pts = [t.apply(v) for v in self.vertices]
            if t.m00 * t.m11 - t.m01 * t.m10 < 0:
                pts.reverse()
            start = min(range(len(pts)), key=lambda i: pts[i])
            ob = _build(pts[start:] + pts[:start])
            cache[t] = ob
        return ob

    @cached_property
    def _mirror_x(self) -> "Obstacle":
        return self.transformed(_t(-1, 0, 0, 1))


# -- validation -------------------------------------------------------------


def _unimodal_cyclic(deltas: list[Fraction]) -> bool:
    """Signs of nonzero deltas form one positive and one negative
    cyclic block."""
    signs = [1 if d > 0 else -1 for d in deltas]
    changes = sum(1 for i in range(len(signs))
                  if signs[i] != signs[(i + 1) % len(signs)])
    return changes == 2


def validate_obstacle(raw_vertices: Sequence) -> Obstacle:
    """Check a vertex cycle and build the obstacle, or raise
    :class:`ObstacleInvalid` with the failure codes.

    Checks run in dependency order and stop at the first failing stage:
    TooFewVertices, NotClosedRectilinear (odd count, non-axis-parallel
    or zero-length edge, missing horizontal/vertical alternation),
    NotRectilinearlyConvex (a cyclic coordinate sequence that rises or
    falls more than once), GeneralPositionViolated (two vertical edges
    sharing an x, or two horizontal edges sharing a y), and finally
    SelfIntersecting.
    """
    pts = [p if isinstance(p, Point) else Point(*p) for p in raw_vertices]
    n = len(pts)
    if n < 4:
        raise ObstacleInvalid(["TooFewVertices"])
    if n % 2 == 1:
        raise ObstacleInvalid(["NotClosedRectilinear"])
    dirs = []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        dx, dy = b.x - a.x, b.y - a.y
        if (dx == 0) == (dy == 0):
            # zero-length or diagonal edge
            raise ObstacleInvalid(["NotClosedRectilinear"])
        dirs.append("V" if dx == 0 else "H")
    if any(dirs[i] == dirs[(i + 1) % n] for i in range(n)):
        raise ObstacleInvalid(["NotClosedRectilinear"])

    hx = [pts[(i + 1) % n].x - pts[i].x for i in range(n) if dirs[i] == "H"]
    vy = [pts[(i + 1) % n].y - pts[i].y for i in range(n) if dirs[i] == "V"]
    if not (_unimodal_cyclic(hx) and _unimodal_cyclic(vy)):
        raise ObstacleInvalid(["NotRectilinearlyConvex"])

    vxs = [pts[i].x for i in range(n) if dirs[i] == "V"]
    hys = [pts[i].y for i in range(n) if dirs[i] == "H"]
    if len(set(vxs)) != len(vxs) or len(set(hys)) != len(hys):
        raise ObstacleInvalid(["GeneralPositionViolated"])

    # Normalize to counterclockwise, starting at the smallest vertex.
    area2 = sum(pts[i].x * pts[(i + 1) % n].y - pts[(i + 1) % n].x * pts[i].y
                for i in range(n))
    if area2 < 0:
        pts.reverse()
    start = min(range(n), key=lambda i: pts[i])
    pts = pts[start:] + pts[:start]

    ob = _build(pts)
    if not _is_simple(ob):
        raise ObstacleInvalid(["SelfIntersecting"])
    return ob


def _build(pts: list[Point]) -> Obstacle:
    n = len(pts)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    box = Box(Point(min(xs), min(ys)), Point(max(xs), max(ys)))
    lo, hi = box

    def edge(i):
        return pts[i], pts[(i + 1) % n]

    left = bottom = right = top = None
    for i in range(n):
        a, b = edge(i)
        if a.x == b.x == lo.x:
            left = i
        elif a.x == b.x == hi.x:
            right = i
        elif a.y == b.y == lo.y:
            bottom = i
        elif a.y == b.y == hi.y:
            top = i
    # Unimodality guarantees each extreme value spans exactly one edge.
    assert None not in (left, bottom, right, top)
    extreme = {
        "left": Segment(*edge(left)),
        "bottom": Segment(*edge(bottom)),
        "right": Segment(*edge(right)),
        "top": Segment(*edge(top)),
    }

    def walk_between(i_from: int, i_to: int) -> tuple[Point, ...]:
        """Vertices from the head of edge i_from to the tail of edge
        i_to, inclusive, in cyclic order."""
        out = []
        k = (i_from + 1) % n
        while True:
            out.append(pts[k])
            if k == i_to:
                break
            k = (k + 1) % n
        return tuple(out)

    walks = {
        "w1": walk_between(left, bottom),
        "w2": walk_between(bottom, right),
        "w3": walk_between(right, top),
        "w4": walk_between(top, left),
    }

    reflex_all = set()
    for i in range(n):
        prv = pts[(i - 1) % n]
        cur = pts[i]
        nxt = pts[(i + 1) % n]
        if cross(prv, cur, nxt) < 0:
            reflex_all.add(cur)
    reflex = {w: tuple(v for v in walks[w] if v in reflex_all)
              for w in walks}

    def plateaus_from(chain: list[Point], horizontal: bool):
        """Constant stretches of an x-monotone (resp. y-monotone)
        vertex chain."""
        out = []
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            if horizontal and a.y == b.y and a.x != b.x:
                out.append((min(a.x, b.x), max(a.x, b.x), a.y))
            elif not horizontal and a.x == b.x and a.y != b.y:
                out.append((min(a.y, b.y), max(a.y, b.y), a.x))
        out.sort()
        return tuple(out)

    eb = extreme["bottom"]
    et = extreme["top"]
    el = extreme["left"]
    er = extreme["right"]
    # Chains listed in increasing coordinate order.
    bottom_chain = ([Point(lo.x, el.a.y if el.a.y < el.b.y else el.b.y)]
                    + list(walks["w1"]) + [eb.b]
                    + list(walks["w2"]) + [Point(hi.x, min(er.a.y, er.b.y))])
    top_chain = ([Point(lo.x, max(el.a.y, el.b.y))]
                 + list(reversed(walks["w4"])) + [et.b]
                 + list(reversed(walks["w3"]))
                 + [Point(hi.x, max(er.a.y, er.b.y))])
    left_chain = ([Point(min(eb.a.x, eb.b.x), lo.y)]
                  + list(reversed(walks["w1"]))
                  + list(reversed(walks["w4"]))
                  + [Point(min(et.a.x, et.b.x), hi.y)])
    right_chain = ([Point(max(eb.a.x, eb.b.x), lo.y)]
                   + list(walks["w2"]) + list(walks["w3"])
                   + [Point(max(et.a.x, et.b.x), hi.y)])

    bottom_plateaus = plateaus_from(_dedup(bottom_chain), True)
    top_plateaus = plateaus_from(_dedup(top_chain), True)
    left_plateaus = plateaus_from(_dedup(left_chain), False)
    right_plateaus = plateaus_from(_dedup(right_chain), False)

    corners = []
    vset = set(pts)
    for name in CORNER_NAMES:
        cp = {"bl": Point(lo.x, lo.y), "br": Point(hi.x, lo.y),
              "tr": Point(hi.x, hi.y), "tl": Point(lo.x, hi.y)}[name]
        if cp in vset:
            corners.append(name)
    corners.sort(key=lambda nm: {"bl": Point(lo.x, lo.y),
                                 "br": Point(hi.x, lo.y),
                                 "tr": Point(hi.x, hi.y),
                                 "tl": Point(lo.x, hi.y)}[nm])

    return Obstacle(
        vertices=tuple(pts),
        box=box,
        extreme=extreme,
        extreme_corners=tuple(corners),
        walks=walks,
        reflex=reflex,
        bottom_plateaus=bottom_plateaus,
        top_plateaus=top_plateaus,
        left_plateaus=left_plateaus,
        right_plateaus=right_plateaus,
        _bot_starts=[p[0] for p in bottom_plateaus],
        _top_starts=[p[0] for p in top_plateaus],
        _left_starts=[p[0] for p in left_plateaus],
        _right_starts=[p[0] for p in right_plateaus],
    )


def _dedup(chain: list[Point]) -> list[Point]:
    out = [chain[0]]
    for p in chain[1:]:
        if p != out[-1]:
            out.append(p)
    return out


def _is_simple(ob: Obstacle) -> bool:
    """With monotone walks, the only possible boundary crossings are
    lower chain against upper chain; the polygon is simple exactly when
    the lower envelope stays strictly below the upper one at every
    interior x (both adjacent plateaus counted at a break)."""
    lo, hi = ob.box
    cuts = sorted({x for x, _, _ in ob.bottom_plateaus}
                  | {x for x, _, _ in ob.top_plateaus}
                  | {hi.x})
    for a in cuts:
        if a == lo.x or a == hi.x:
            continue
        if max(ob.bottom_at(a, -1), ob.bottom_at(a, +1)) >= \
           min(ob.top_at(a, -1), ob.top_at(a, +1)):
            return False
    for k in range(len(cuts) - 1):
        u = cuts[k]
        if ob.bottom_at(u, +1) >= ob.top_at(u, +1):
            return False
    return True


# -- classification ----------------------------------------------------------


def _spans_overlap(a1, a2, b1, b2) -> bool:
    return max(a1, b1) <= min(a2, b2)


def _pair_overlaps(ob: Obstacle, vertical_pair: bool) -> bool:
    """Do the orthogonal projections of a parallel extreme-edge pair
    onto each other intersect?  (left/right pair compares y-spans,
    bottom/top compares x-spans.)"""
    if vertical_pair:
        e1, e3 = ob.extreme["left"], ob.extreme["right"]
        return _spans_overlap(min(e1.a.y, e1.b.y), max(e1.a.y, e1.b.y),
                              min(e3.a.y, e3.b.y), max(e3.a.y, e3.b.y))
    e2, e4 = ob.extreme["bottom"], ob.extreme["top"]
    return _spans_overlap(min(e2.a.x, e2.b.x), max(e2.a.x, e2.b.x),
                          min(e4.a.x, e4.b.x), max(e4.a.x, e4.b.x))


def _pair_slope_sign(ob: Obstacle, vertical_pair: bool) -> int:
    """Sign of the slope of the segment joining the midpoints of a
    non-overlapping parallel extreme-edge pair."""
    def mid(s: Segment) -> Point:
        return Point((s.a.x + s.b.x) / 2, (s.a.y + s.b.y) / 2)

    if vertical_pair:
        m1 = mid(ob.extreme["left"])
        m3 = mid(ob.extreme["right"])
        return 1 if m3.y > m1.y else -1
    m2 = mid(ob.extreme["bottom"])
    m4 = mid(ob.extreme["top"])
    return 1 if m4.x > m2.x else -1


_END_BY_CORNER = {
    "bl": ("left", "bottom"),
    "br": ("right", "bottom"),
    "tr": ("right", "top"),
    "tl": ("left", "top"),
}
_OPPOSITE_CORNER = {"bl": "tr", "br": "tl", "tr": "bl", "tl": "br"}
_CORNER_ORDER = {"bl": 0, "tl": 1, "br": 2, "tr": 3}


def classify(ob: Obstacle) -> ObstacleClass:
    """Type by extreme-corner count, plus general subtype and ends.

    Four corners: rectangle.  Three: L.  Two adjacent: T.  Two
    opposite: staircase.  One: partial staircase.  None: general, with
    subtype (a)-(d) from the overlap pattern and slope signs of the two
    parallel extreme-edge pairs.  Ends exist only when neither parallel
    pair overlaps; they pair each extreme edge with the perpendicular
    one it terminates against.
    """
    corners = ob.extreme_corners
    k = len(corners)
    subtype = None
    ends: tuple = ()
    ov_v = _pair_overlaps(ob, True)
    ov_h = _pair_overlaps(ob, False)

    if k == 4:
        kind = ObstacleKind.RECTANGLE
    elif k == 3:
        kind = ObstacleKind.L
    elif k == 2:
        a, b = corners
        if _OPPOSITE_CORNER[a] == b:
            kind = ObstacleKind.STAIRCASE
            if not ov_v and not ov_h:
                ends = tuple(_END_BY_CORNER[c] for c in
                             sorted(corners, key=_CORNER_ORDER.get))
        else:
            kind = ObstacleKind.T
    elif k == 1:
        kind = ObstacleKind.PARTIAL_STAIRCASE
        if not ov_v and not ov_h:
            c = corners[0]
            far = _OPPOSITE_CORNER[c]
            pair = sorted((c, far), key=_CORNER_ORDER.get)
            ends = tuple(_END_BY_CORNER[cc] for cc in pair)
    else:
        kind = ObstacleKind.GENERAL
        if ov_v and ov_h:
            subtype = GeneralSubtype.A
        elif ov_v or ov_h:
            subtype = GeneralSubtype.B
        else:
            sv = _pair_slope_sign(ob, True)
            sh = _pair_slope_sign(ob, False)
            subtype = GeneralSubtype.C if sv != sh else GeneralSubtype.D
            if subtype is GeneralSubtype.D:
                if sv > 0:
                    ends = (("left", "bottom"), ("right", "top"))
                else:
                    ends = (("left", "top"), ("right", "bottom"))
    return ObstacleClass(kind=kind, subtype=subtype, ends=ends)


# -- canonical frames ---------------------------------------------------------


def canonicalize(ob: Obstacle, target: str) -> tuple[Obstacle, Transform]:
    """Map the obstacle into the frame its skeleton recipe assumes.

    Targets: ``staircase`` wants extreme corners at bottom-left and
    top-right; ``partial`` wants the single corner at top-right;
    ``general`` wants positively sloped extreme-edge pairs (type (d))
    or is the identity otherwise.  Returns the transformed obstacle and
    the map from original to canonical coordinates (invert to go back).
    """
    lo, hi = ob.box
    flip_x = _t(-1, 0, 0, 1, lo.x + hi.x, 0)
    flip_y = _t(1, 0, 0, -1, 0, lo.y + hi.y)
    rot180 = flip_y.compose(flip_x)
    cls = classify(ob)

    if target == "staircase":
        if cls.kind is not ObstacleKind.STAIRCASE:
            raise ValueError("staircase frame needs a staircase obstacle")
        t = IDENTITY if "bl" in ob.extreme_corners else flip_x
    elif target == "partial":
        if cls.kind is not ObstacleKind.PARTIAL_STAIRCASE:
            raise ValueError("partial frame needs a partial staircase")
        t = {"tr": IDENTITY, "tl": flip_x, "br": flip_y,
             "bl": rot180}[ob.extreme_corners[0]]
    elif target == "general":
        if cls.kind is not ObstacleKind.GENERAL:
            raise ValueError("general frame needs a general obstacle")
        if cls.subtype in (GeneralSubtype.C, GeneralSubtype.D) and \
                _pair_slope_sign(ob, True) < 0:
            t = flip_x
        else:
            t = IDENTITY
    else:
        raise ValueError(f"unknown canonical target {target!r}")
    return ob.transformed(t), t
