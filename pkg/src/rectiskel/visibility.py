"""Visibility structure inside a rectilinearly-convex obstacle.

Builds the candidate pool of maximal visibility edges (segments inside
the obstacle, extended until they leave it), decides mutual visibility
between extreme edges, and computes the frontier of a partial skeleton.
The skeleton construction in :mod:`rectiskel.skeleton` draws everything
it needs from here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import _kernel
from ._sweep_py import SweepFrame
from .geom import (Point, Segment, bbox, interval_union_length_outside,
                   segments_intersect)
from .obstacle import (IDENTITY, TRANSPOSE, Obstacle, ObstacleKind, Transform,
                       _t, classify, canonicalize)

__all__ = [
    "Frontier", "advancement", "auxiliary_edge", "candidate_set",
    "extreme_pair_visibility", "frontiers", "maximal_extreme_edge",
    "perpendicular_extreme_edge", "rotational_sweep",
]


# -- frame plumbing -----------------------------------------------------------


def _flip_x(ob: Obstacle) -> Transform:
    return _t(-1, 0, 0, 1, ob.box.lo.x + ob.box.hi.x, 0)


def _flip_y(ob: Obstacle) -> Transform:
    return _t(1, 0, 0, -1, 0, ob.box.lo.y + ob.box.hi.y)


def _rot180(ob: Obstacle) -> Transform:
    return _flip_y(ob).compose(_flip_x(ob))


def _frame(ob: Obstacle) -> SweepFrame:
    # The far-corner event exists only when the top-right box corner is
    # an actual vertex.  Frames are memoized on the obstacle: scans are
    # re-run from many anchors over the same geometry.
    fr = ob.__dict__.get("_sweep_frame")
    if fr is None:
        fr = SweepFrame.from_obstacle(ob,
                                      with_corner="tr" in ob.extreme_corners)
        ob.__dict__["_sweep_frame"] = fr
    return fr


def _seg(raw) -> Segment:
    (p, q) = raw
    return Segment(Point(*p), Point(*q)).canonical()


def _seg_swapped(raw) -> Segment:
    ((x1, y1), (x2, y2)) = raw
    return Segment(Point(y1, x1), Point(y2, x2)).canonical()


# -- candidate pool -----------------------------------------------------------


def _chain_reflex_bottom(ob: Obstacle):
    pl = ob.bottom_plateaus
    return [(pl[k][0], max(pl[k - 1][2], pl[k][2])) for k in range(1, len(pl))]


def _chain_reflex_top(ob: Obstacle):
    pl = ob.top_plateaus
    return [(pl[k][0], min(pl[k - 1][2], pl[k][2])) for k in range(1, len(pl))]


def _port_points(ob: Obstacle) -> list[Point]:
    """Endpoints of extreme edges that do not touch an extreme corner."""
    corners = {ob.corner_point(c) for c in ob.extreme_corners}
    pts: list[Point] = []
    for name in ("left", "bottom", "right", "top"):
        e = ob.extreme[name]
        if e.a not in corners and e.b not in corners:
            pts.extend((e.a, e.b))
    return pts


def _candidates_canonical(ob: Obstacle) -> list[Segment]:
    """Maximal visibility edges of a staircase-like obstacle, assembled
    in its canonical frame.

    Anchored scans run over every reflex vertex of the lower chain in
    the plain frame and of the upper chain via the transposed frame;
    extreme corners get full collect-all scans (in the frame that puts
    them bottom-left), and extreme-edge endpoints away from any corner
    get the same collect-all treatment in all four axis flips.
    """
    edges: set[Segment] = set()

    fr = _frame(ob)
    for raw in _kernel.all_anchor_edges(fr):
        edges.add(_seg(raw))
    obT = ob.transformed(TRANSPOSE)
    frT = _frame(obT)
    for raw in _kernel.all_anchor_edges(frT):
        edges.add(_seg_swapped(raw))

    if "bl" in ob.extreme_corners:
        c = ob.corner_point("bl")
        for raw in _kernel.corner_edges(fr, c.x, c.y):
            edges.add(_seg(raw))
    if "tr" in ob.extreme_corners:
        t = _rot180(ob)
        obR = ob.transformed(t)
        cR = t.apply(ob.corner_point("tr"))
        for raw in _kernel.corner_edges(_frame(obR), cR.x, cR.y):
            edges.add(t.apply_segment(_seg(raw)).canonical())

    ports = _port_points(ob)
    if ports:
        variants = [IDENTITY, _flip_x(ob), _flip_y(ob), _rot180(ob)]
        for t in variants:
            obV = ob if t is IDENTITY else ob.transformed(t)
            frV = _frame(obV)
            for p in ports:
                pv = t.apply(p)
                for raw in _kernel.corner_edges(frV, pv.x, pv.y):
                    edges.add(t.apply_segment(_seg(raw)).canonical())
    return sorted(edges)


_FILL_KINDS = (ObstacleKind.STAIRCASE, ObstacleKind.PARTIAL_STAIRCASE,
               ObstacleKind.GENERAL)

_CANON_TARGET = {ObstacleKind.STAIRCASE: "staircase",
                 ObstacleKind.PARTIAL_STAIRCASE: "partial",
                 ObstacleKind.GENERAL: "general"}


def candidate_set(ob: Obstacle) -> tuple[Segment, ...]:
    """All maximal visibility edges the skeleton construction may draw
    from, in original coordinates.

    For rectangles, L and T shapes the constructions use fixed
    ingredients (diagonals, extreme edges, perpendiculars) instead of a
    swept pool; for those kinds this returns the ingredients.
    """
    kind = classify(ob).kind
    if kind is ObstacleKind.RECTANGLE:
        lo, hi = ob.box
        return (Segment(lo, hi).canonical(),
                Segment(Point(lo.x, hi.y), Point(hi.x, lo.y)).canonical())
    if kind is ObstacleKind.L:
        pres = set(ob.extreme_corners)
        if {"bl", "tr"} <= pres:
            diag = Segment(ob.corner_point("bl"), ob.corner_point("tr"))
        else:
            diag = Segment(ob.corner_point("tl"), ob.corner_point("br"))
        mid = next(c for c in pres if _OPP[c] not in pres)
        e1, e2 = (ob.extreme[n].canonical() for n in _CORNER_EDGES[mid])
        return tuple(sorted({diag.canonical(), e1, e2}))
    if kind is ObstacleKind.T:
        corners = {ob.corner_point(c) for c in ob.extreme_corners}
        dc = next(n for n in ("left", "bottom", "right", "top")
                  if {ob.extreme[n].a, ob.extreme[n].b} <= corners)
        return tuple(sorted({ob.extreme[dc].canonical(),
                             perpendicular_extreme_edge(ob, _OPP_EDGE[dc])}))
    obC, t = canonicalize(ob, _CANON_TARGET[kind])
    back = t.inverse()
    return tuple(sorted(back.apply_segment(s).canonical()
                        for s in _candidates_canonical(obC)))


_OPP = {"bl": "tr", "tr": "bl", "br": "tl", "tl": "br"}
_CORNER_EDGES = {"bl": ("left", "bottom"), "br": ("right", "bottom"),
                 "tl": ("left", "top"), "tr": ("right", "top")}
_OPP_EDGE = {"left": "right", "right": "left", "bottom": "top", "top": "bottom"}


# -- public sweep wrapper -----------------------------------------------------


def rotational_sweep(ob: Obstacle, anchor: Point, mode: str = "ccw_from_east",
                     context: str = "edge"):
    """Run one scan from ``anchor``.

    ``mode`` ``ccw_from_east`` scans with the lower chain as the
    anchoring walk; ``cw_from_north`` does the mirror scan (implemented
    on the transposed obstacle).  ``context`` selects the acceptance
    rule: ``edge`` for the single feasible through-vertex edge,
    ``corner`` for a collect-all scan, ``aux`` for a frontier-endpoint
    edge pinned at the anchor.
    """
    anchor = anchor if isinstance(anchor, Point) else Point(*anchor)
    if mode == "ccw_from_east":
        fr, ax, ay, conv = _frame(ob), anchor.x, anchor.y, _seg
    elif mode == "cw_from_north":
        obT = ob.transformed(TRANSPOSE)
        fr, ax, ay, conv = _frame(obT), anchor.y, anchor.x, _seg_swapped
    else:
        raise ValueError(f"unknown sweep mode {mode!r}")
    if context == "edge":
        from . import _sweep_py
        raw = _sweep_py.anchor_edge(fr, ax, ay)
        return None if raw is None else conv(raw)
    if context == "corner":
        return tuple(conv(raw) for raw in _kernel.corner_edges(fr, ax, ay))
    if context == "aux":
        raw = _aux_edge_raw(fr, ax, ay)
        return None if raw is None else conv(raw)
    raise ValueError(f"unknown sweep context {context!r}")


def auxiliary_edge(ob: Obstacle, anchor: Point) -> tuple[Segment, ...]:
    """Edges pinned at a boundary point, one per scan direction, each
    running to its first feasible landing (vertical-edge rule)."""
    out = []
    for m in ("ccw_from_east", "cw_from_north"):
        s = rotational_sweep(ob, anchor, mode=m, context="aux")
        if s is not None:
            out.append(s.canonical())
    return tuple(dict.fromkeys(out))


# -- separating-line machinery ------------------------------------------------


def _hull(pts: list[tuple], upper: bool) -> list[tuple]:
    pts = sorted(set(pts))
    h: list[tuple] = []
    for p in pts:
        while len(h) >= 2:
            o, a = h[-2], h[-1]
            c = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if (c >= 0) if upper else (c <= 0):
                h.pop()
            else:
                break
        h.append(p)
    return h


def _hull_eval(h: list[tuple], x):
    from bisect import bisect_right
    if len(h) == 1:
        return h[0][1]
    i = min(max(bisect_right([p[0] for p in h], x) - 1, 0), len(h) - 2)
    (x1, y1) = h[i]
    (x2, y2) = h[i + 1]
    if x == x1:
        return y1
    return y1 + Fraction((y2 - y1) * (x - x1), x2 - x1)


def _slope_window(P, Q, x0, y0):
    lo = hi = None
    ok = True
    for (px, py) in P:
        if px > x0:
            m = Fraction(py - y0, px - x0)
            if lo is None or m > lo:
                lo = m
        elif px < x0:
            m = Fraction(py - y0, px - x0)
            if hi is None or m < hi:
                hi = m
        elif py > y0:
            ok = False
    for (qx, qy) in Q:
        if qx > x0:
            m = Fraction(qy - y0, qx - x0)
            if hi is None or m < hi:
                hi = m
        elif qx < x0:
            m = Fraction(qy - y0, qx - x0)
            if lo is None or m > lo:
                lo = m
        elif qy < y0:
            ok = False
    if not ok or (lo is not None and hi is not None and lo > hi):
        return None
    m = lo if lo is not None else (hi if hi is not None else Fraction(0))
    return (m, y0 - m * x0)


def _feasible_line(P: list[tuple], Q: list[tuple]):
    """A line lying on or above every point of P and on or below every
    point of Q, as (slope, intercept), or None.

    Exists iff the upper hull of P stays on or below the lower hull of
    Q over the common x-range; the witness is a supporting line at the
    argmax of their gap.
    """
    hp = _hull(P, upper=True)
    hq = _hull(Q, upper=False)
    dlo = max(hp[0][0], hq[0][0])
    dhi = min(hp[-1][0], hq[-1][0])
    if dlo > dhi:
        raise ValueError("separating-line domains do not meet")
    cand_x = {dlo, dhi}
    cand_x.update(p[0] for p in hp if dlo <= p[0] <= dhi)
    cand_x.update(q[0] for q in hq if dlo <= q[0] <= dhi)
    best_x, best_gap = None, None
    for x in sorted(cand_x):
        gap = _hull_eval(hp, x) - _hull_eval(hq, x)
        if best_gap is None or gap > best_gap:
            best_x, best_gap = x, gap
    if best_gap > 0:
        return None
    line = _slope_window(P, Q, best_x, _hull_eval(hp, best_x))
    if line is None:
        line = _slope_window(P, Q, best_x, _hull_eval(hq, best_x))
    if line is None:
        raise AssertionError("supporting-line window unexpectedly empty")
    return line


# -- extreme-edge visibility --------------------------------------------------


def _span(seg: Segment, vertical: bool) -> tuple:
    vals = (seg.a.y, seg.b.y) if vertical else (seg.a.x, seg.b.x)
    return (min(vals), max(vals))


def _opposite_core(ob: Obstacle) -> Optional[Segment]:
    """Witness for the left/right pair: the overlap-midpoint horizontal
    when the port spans meet, otherwise a separating-line witness
    sandwiched between the chain reflex vertices."""
    lo, hi = ob.box
    l1, l2 = _span(ob.extreme["left"], True)
    r1, r2 = _span(ob.extreme["right"], True)
    olo, ohi = max(l1, r1), min(l2, r2)
    if olo <= ohi:
        y = Fraction(olo + ohi, 2)
        w = Segment(Point(lo.x, y), Point(hi.x, y))
        assert ob.segment_in_obstacle(w)
        return w.canonical()
    P = _chain_reflex_bottom(ob) + [(lo.x, l1), (hi.x, r1)]
    Q = _chain_reflex_top(ob) + [(lo.x, l2), (hi.x, r2)]
    line = _feasible_line(P, Q)
    if line is None:
        return None
    m, c = line
    w = Segment(Point(lo.x, m * lo.x + c), Point(hi.x, m * hi.x + c))
    assert ob.segment_in_obstacle(w)
    return w.canonical()


def _adjacent_core(ob: Obstacle) -> Optional[Segment]:
    """Witness for the left/bottom pair.

    The longest candidate joins the far endpoints (top of the left
    edge, right end of the bottom edge); when that segment leaves the
    obstacle a separating line between the lower-chain constraints and
    the upper-chain constraints still certifies some witness."""
    lo, hi = ob.box
    l1, l2 = _span(ob.extreme["left"], True)
    b1, b2 = _span(ob.extreme["bottom"], False)
    assert b1 > lo.x and l1 > lo.y
    far = Segment(Point(lo.x, l2), Point(b2, lo.y))
    if ob.segment_in_obstacle(far):
        return far.canonical()
    # the break at b1 itself still binds: just left of it the floor sits
    # at the reflex height, so by continuity the line must clear it
    P = [(lo.x, l1)] + [(x, y) for (x, y) in _chain_reflex_bottom(ob)
                        if x <= b1] + [(b1, lo.y)]
    Q = [(lo.x, l2)] + [(x, y) for (x, y) in _chain_reflex_top(ob)
                        if x < b2] + [(b2, lo.y)]
    line = _feasible_line(P, Q)
    if line is None:
        return None
    m, c = line
    assert m < 0
    p = Point(lo.x, m * lo.x + c)
    q = Point(Fraction(lo.y - c, m), lo.y)
    w = Segment(p, q)
    assert ob.segment_in_obstacle(w)
    return w.canonical()


_ADJ_MAP = {
    frozenset(("left", "bottom")): "id",
    frozenset(("right", "bottom")): "fx",
    frozenset(("left", "top")): "fy",
    frozenset(("right", "top")): "rot",
}


def extreme_pair_visibility(ob: Obstacle, a: str, b: str) -> Optional[Segment]:
    """A maximal witness segment joining extreme edges ``a`` and ``b``
    inside the obstacle, or None when the pair is not mutually visible.
    """
    pair = frozenset((a, b))
    if pair == frozenset(("left", "right")):
        return _opposite_core(ob)
    if pair == frozenset(("bottom", "top")):
        w = _opposite_core(ob.transformed(TRANSPOSE))
        return None if w is None else TRANSPOSE.apply_segment(w).canonical()
    kind = _ADJ_MAP.get(pair)
    if kind is None:
        raise ValueError(f"not an extreme-edge pair: {a!r}, {b!r}")
    shared = {"id": "bl", "fx": "br", "fy": "tl", "rot": "tr"}[kind]
    if shared in ob.extreme_corners:
        # the pair meets at the box corner, so each extreme edge
        # already touches the other there; hand back the longer one
        wa, wb = ob.extreme[a].canonical(), ob.extreme[b].canonical()
        return min((wa, wb), key=lambda s: (-s.length_sq(), s.a, s.b))
    t = {"id": IDENTITY, "fx": _flip_x(ob), "fy": _flip_y(ob),
         "rot": _rot180(ob)}[kind]
    obV = ob if t is IDENTITY else ob.transformed(t)
    w = _adjacent_core(obV)
    return None if w is None else t.apply_segment(w).canonical()


def perpendicular_extreme_edge(ob: Obstacle, name: str) -> Segment:
    """The axis-parallel visibility edge through the midpoint of an
    extreme edge, extended across the full slice of the obstacle."""
    e = ob.extreme[name]
    if name in ("bottom", "top"):
        x = Fraction(e.a.x + e.b.x, 2)
        y0, y1 = ob.closed_slice_x(x)
        return Segment(Point(x, y0), Point(x, y1)).canonical()
    y = Fraction(e.a.y + e.b.y, 2)
    x0, x1 = ob.closed_slice_y(y)
    return Segment(Point(x0, y), Point(x1, y)).canonical()


def maximal_extreme_edge(ob: Obstacle, name: str,
                         candidates: list[Segment]) -> Segment:
    """Best candidate with an endpoint on extreme edge ``name``: for a
    vertical edge the widest horizontal shadow first, for a horizontal
    edge the tallest vertical shadow, then the farthest reach along the
    other axis toward the opposite end, then length.  The midpoint
    perpendicular always competes, so a result exists."""
    e = ob.extreme[name]
    vertical = name in ("left", "right")
    span = _span(e, vertical)

    def on_edge(p: Point) -> bool:
        if vertical:
            return p.x == e.a.x and span[0] <= p.y <= span[1]
        return p.y == e.a.y and span[0] <= p.x <= span[1]

    pool = [s for s in candidates if on_edge(s.a) or on_edge(s.b)]
    pool.append(perpendicular_extreme_edge(ob, name))

    def key(s: Segment):
        if vertical:
            primary = abs(s.b.x - s.a.x)
            reach = max(s.a.y, s.b.y) if name == "left" \
                else -min(s.a.y, s.b.y)
        else:
            primary = abs(s.b.y - s.a.y)
            reach = max(s.a.x, s.b.x) if name == "bottom" \
                else -min(s.a.x, s.b.x)
        return (primary, reach, s.length_sq())

    best = None
    for s in pool:
        if best is None:
            best = s
            continue
        ks, kb = key(s), key(best)
        if ks > kb or (ks == kb and s.canonical() < best.canonical()):
            best = s
    return best.canonical()


# -- frontiers and advancement ------------------------------------------------


@dataclass(frozen=True)
class Frontier:
    """One connected piece of the advancing front: the part of the
    skeleton's bounding-box boundary that runs through the obstacle's
    interior (one segment, or two meeting at a box corner)."""

    segments: tuple[Segment, ...]

    def endpoints(self) -> tuple[Point, ...]:
        pts: list[Point] = []
        for s in self.segments:
            pts.extend((s.a, s.b))
        return tuple(pts)

    def intersects(self, s: Segment) -> bool:
        return any(segments_intersect(s, f) for f in self.segments)


def frontiers(ob: Obstacle, edges) -> list[Frontier]:
    """Frontier components of the box spanned by ``edges``."""
    box = bbox(edges)
    if box.lo.x == box.hi.x or box.lo.y == box.hi.y:
        raise ValueError("skeleton box is degenerate")
    pieces: list[Segment] = []
    for y in (box.lo.y, box.hi.y):
        isl = ob.interior_slice_y(y)
        if isl is not None:
            xa, xb = max(box.lo.x, isl[0]), min(box.hi.x, isl[1])
            if xa < xb:
                pieces.append(Segment(Point(xa, y), Point(xb, y)))
    for x in (box.lo.x, box.hi.x):
        isl = ob.interior_slice_x(x)
        if isl is not None:
            ya, yb = max(box.lo.y, isl[0]), min(box.hi.y, isl[1])
            if ya < yb:
                pieces.append(Segment(Point(x, ya), Point(x, yb)))
    # merge pieces that meet at a box corner
    groups: list[list[Segment]] = []
    for p in pieces:
        mine = [p]
        rest = []
        ends = {p.a, p.b}
        for g in groups:
            if any(e in ends for s in g for e in (s.a, s.b)):
                mine.extend(g)
                ends.update(e for s in g for e in (s.a, s.b))
            else:
                rest.append(g)
        rest.append(mine)
        groups = rest
    return sorted((Frontier(tuple(sorted(s.canonical() for s in g)))
                   for g in groups),
                  key=lambda f: f.segments)


def advancement(s: Segment, cov_h, cov_v) -> tuple[Fraction, Fraction]:
    """How far the segment's shadows stick out of the covered intervals
    (horizontal extent first)."""
    dh = interval_union_length_outside(s.a.x, s.b.x, cov_h)
    dv = interval_union_length_outside(s.a.y, s.b.y, cov_v)
    return (dh, dv)
