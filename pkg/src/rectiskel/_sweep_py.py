"""Rotational plane-sweep engine, pure Python reference implementation.

Works in a canonical frame where candidate edges run up and to the
right: the obstacle is described by its lower and upper envelopes
(plateau arrays), plus an optional far corner.  A compiled twin with
identical semantics lives in ``_sweep_core``; this module is the
arbiter of correctness and also the only implementation used for
rational-coordinate anchors.

The scan from an anchor enumerates candidate vertices (reflex corners
of the two envelope chains, plus the far corner) in increasing order of
gradient from the anchor, nearer vertices first among collinear ones.
A vertex is visible when no lower-chain vertex that is still ahead in
gradient order lies to its left (it would poke above the sight line)
and no upper-chain vertex already passed lies to its left (it would
hang below).  An edge anchored on the lower chain is feasible only when
its extension beyond the first visible upper-chain vertex leaves
through a vertical edge or the far corner; leaving through a horizontal
edge kills the anchor entirely.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction


class SweepFrame:
    """Envelopes of an obstacle in the canonical sweep frame.

    ``bx``/``bv``: lower envelope; value ``bv[k]`` holds on
    [``bx[k]``, ``bx[k+1]``).  ``tx``/``tv``: upper envelope.  The
    reflex corner at an interior lower break is its higher endpoint, at
    an upper break its lower endpoint.
    """

    __slots__ = ("bx", "bv", "tx", "tv", "corner", "x_min", "x_max",
                 "bottom_reflex", "top_reflex", "merged", "ints_cache")

    def __init__(self, bx, bv, tx, tv, corner=None):
        self.bx = list(bx)
        self.bv = list(bv)
        self.tx = list(tx)
        self.tv = list(tv)
        self.corner = corner
        self.x_min = self.bx[0]
        self.x_max = self.bx[-1]
        self.bottom_reflex = [
            (self.bx[k], max(self.bv[k - 1], self.bv[k]))
            for k in range(1, len(self.bv))
        ]
        self.top_reflex = [
            (self.tx[k], min(self.tv[k - 1], self.tv[k]))
            for k in range(1, len(self.tv))
        ]
        self.merged = sorted(set(self.bx[1:-1]) | set(self.tx[1:-1])
                             | {self.x_max})
        self.ints_cache = False  # not yet computed (None = unusable)

    @classmethod
    def from_obstacle(cls, ob, with_corner: bool = False):
        bx = [p[0] for p in ob.bottom_plateaus] + [ob.box.hi.x]
        bv = [p[2] for p in ob.bottom_plateaus]
        tx = [p[0] for p in ob.top_plateaus] + [ob.box.hi.x]
        tv = [p[2] for p in ob.top_plateaus]
        corner = (ob.box.hi.x, ob.box.hi.y) if with_corner else None
        return cls(bx, bv, tx, tv, corner)

    def b_right(self, x):
        return self.bv[min(bisect_right(self.bx, x), len(self.bv)) - 1]

    def b_left(self, x):
        return self.bv[max(bisect_left(self.bx, x), 1) - 1]

    def t_right(self, x):
        return self.tv[min(bisect_right(self.tx, x), len(self.tv)) - 1]

    def t_left(self, x):
        return self.tv[max(bisect_left(self.tx, x), 1) - 1]


def first_exit_forward(fr: SweepFrame, x0, y0, num, den):
    """First boundary crossing of the ray from (x0, y0) with slope
    num/den (den > 0, num >= 0), for a start point on or inside the
    region with room to its right.

    Returns (x, y, kind): kind 'v' for a vertical-edge or vertex
    landing, 'h' for a horizontal-edge crossing, 'w' for the right
    wall, 'c' for exactly the top-right corner of the wall.

    A start point sitting exactly where the ceiling steps down to its
    height is already on its exit: every ascending ray leaves through
    that step immediately, a vertex landing on the step's face.
    """
    tr0 = fr.t_right(x0)
    if y0 >= tr0 and tr0 < fr.t_left(x0):
        return (x0, y0, "v")
    xcur, ycur = x0, y0
    i = bisect_right(fr.merged, x0)
    while True:
        a = fr.merged[i] if i < len(fr.merged) else fr.x_max
        i += 1
        tv = fr.t_right(xcur)
        ya = ycur + Fraction(num * (a - xcur), den) if num else ycur
        if ya > tv:
            # crosses the upper plateau inside the stretch
            xs = xcur + Fraction(den * (tv - ycur), num)
            return (xs, tv, "h")
        if a == fr.x_max:
            return (a, ya, "c" if ya == fr.t_left(a) else "w")
        br = fr.b_right(a)
        if br > fr.b_left(a) and ya < br:
            return (a, ya, "v")
        tr = fr.t_right(a)
        if tr < tv and ya >= tr:
            return (a, ya, "v")
        xcur, ycur = a, ya


def first_exit_backward(fr: SweepFrame, x0, y0, num, den):
    """First boundary crossing of the ray from (x0, y0) going down and
    to the left along slope num/den (den > 0, num >= 0)."""
    xcur, ycur = x0, y0
    lower = [fr.x_min] + fr.merged[:-1]
    i = bisect_left(lower, x0) - 1
    while True:
        a = lower[i] if i >= 0 else fr.x_min
        i -= 1
        bv = fr.b_left(xcur)
        ya = ycur - Fraction(num * (xcur - a), den) if num else ycur
        if ya < bv:
            xs = xcur - Fraction(den * (ycur - bv), num)
            return (xs, bv, "h")
        if a == fr.x_min:
            return (a, ya, "w")
        bl = fr.b_left(a)
        if bl > bv and ya <= bl:
            return (a, ya, "v")
        tl = fr.t_left(a)
        if tl < fr.t_right(a) and ya > tl:
            return (a, ya, "v")
        xcur, ycur = a, ya


_BOTTOM, _TOP, _CORNER = 0, 1, 2


def _scan_events(fr: SweepFrame, ax, ay):
    """Events for an anchor: (gradient, dx, kind, x, y, bslot) sorted
    by gradient then nearness, plus the initial blocked-x threshold
    from upper-chain vertices at or below the anchor's height.

    An anchor whose immediate up-right window is outside the region —
    floor jumping above it at its own x, or the ceiling at or below it
    — sees nothing, since every ascending ray leaves instantly."""
    if ax >= fr.x_max or ay < fr.b_right(ax) or ay >= fr.t_right(ax):
        return [], [], None
    bots = []
    for (x, y) in fr.bottom_reflex:
        if x > ax and y > ay:
            bots.append((x, y))
    events = []
    for slot, (x, y) in enumerate(bots):
        events.append((Fraction(y - ay, x - ax), x - ax, _BOTTOM, x, y, slot))
    top_block = None
    for (x, y) in fr.top_reflex:
        if x <= ax:
            continue
        if y <= ay:
            if top_block is None or x < top_block:
                top_block = x
        else:
            events.append((Fraction(y - ay, x - ax), x - ax, _TOP, x, y, -1))
    if fr.corner is not None:
        cx, cy = fr.corner
        if cx > ax and cy > ay:
            events.append((Fraction(cy - ay, cx - ax), cx - ax,
                           _CORNER, cx, cy, -1))
    events.sort(key=lambda e: (e[0], e[1]))
    return events, [x for (x, _) in bots], top_block


class _Scan:
    """Shared visibility state machine over the sorted event list."""

    def __init__(self, fr: SweepFrame, ax, ay):
        self.events, self.bot_xs, top_block = _scan_events(fr, ax, ay)
        self.done = [False] * len(self.bot_xs)
        self.head = 0
        self.min_top = top_block  # None means no blocker yet

    def _min_unproc_bot(self):
        while self.head < len(self.bot_xs) and self.done[self.head]:
            self.head += 1
        return self.bot_xs[self.head] if self.head < len(self.bot_xs) else None

    def run(self):
        """Yield (kind, x, y, visible) per event in sweep order."""
        for (_, _, kind, x, y, slot) in self.events:
            if kind == _BOTTOM:
                self.done[slot] = True
                mb = self._min_unproc_bot()
                vis = (self.min_top is None or self.min_top > x) and \
                      (mb is None or mb > x)
                yield (kind, x, y, vis)
            else:
                mb = self._min_unproc_bot()
                vis = (mb is None or mb > x) and \
                      (self.min_top is None or self.min_top > x)
                yield (kind, x, y, vis)
                if kind == _TOP:
                    if self.min_top is None or x < self.min_top:
                        self.min_top = x


def anchor_edge(fr: SweepFrame, ax, ay):
    """The unique feasible visibility edge through a lower-chain
    anchor, as ((x1, y1), (x2, y2)), or None.

    The edge must also pass through a visible upper-chain vertex and
    leave through a vertical edge (or exactly the far corner); an exit
    through a horizontal edge proves no feasible edge exists at this
    anchor, and a visible far corner leaves the edge to the corner
    scans instead.
    """
    for kind, x, y, vis in _Scan(fr, ax, ay).run():
        if not vis or kind == _BOTTOM:
            continue
        if kind == _CORNER:
            return None
        fx, fy, ek = first_exit_forward(fr, x, y, y - ay, x - ax)
        if ek == "h":
            return None
        nx, ny, _ = first_exit_backward(fr, ax, ay, y - ay, x - ax)
        return ((nx, ny), (fx, fy))
    return None


def all_anchor_edges(fr: SweepFrame):
    out = []
    for (ax, ay) in fr.bottom_reflex:
        e = anchor_edge(fr, ax, ay)
        if e is not None:
            out.append(e)
    return out


def corner_edges(fr: SweepFrame, ax, ay):
    """Maximal edges from a boundary anchor through every visible
    vertex (both chains), each pinned at the anchor and extended to its
    first exit; any exit kind qualifies."""
    out = []
    for kind, x, y, vis in _Scan(fr, ax, ay).run():
        if not vis:
            continue
        if kind == _CORNER:
            out.append(((ax, ay), (x, y)))
            continue
        fx, fy, _ = first_exit_forward(fr, x, y, y - ay, x - ax)
        out.append(((ax, ay), (fx, fy)))
    return out


def aux_edge(fr: SweepFrame, ax, ay):
    """Like :func:`anchor_edge` but pinned at the anchor (no backward
    extension) and accepting the far corner as a terminal; used for
    frontier-endpoint auxiliary edges."""
    for kind, x, y, vis in _Scan(fr, ax, ay).run():
        if not vis or kind == _BOTTOM:
            continue
        if kind == _CORNER:
            return ((ax, ay), (x, y))
        fx, fy, ek = first_exit_forward(fr, x, y, y - ay, x - ax)
        if ek == "h":
            return None
        return ((ax, ay), (fx, fy))
    return None
