"""Independent brute-force checks for the skeleton machinery.

Everything here is deliberately primitive: candidate edges come from
enumerating pairs of boundary feature points and extending them with
the obstacle's containment primitives, mutual visibility of extreme
edges from a finite family of supporting lines, and minimum skeletons
from exhaustive subset search.  None of it shares code with the plane
sweep or the greedy constructions it is used to judge, so agreement is
meaningful evidence of correctness.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Optional

from .geom import (Point, Segment, bbox, point_on_segment,
                   segments_intersect)
from .obstacle import TRANSPOSE, Obstacle, ObstacleKind, canonicalize, classify
from .rng import SplitMix64, derive_seed
from .skeleton import obstacle_separates, path_blocked

__all__ = ["CapExceeded", "brute_candidate_set", "brute_pair_visibility",
           "brute_force_min_skeleton", "probe_skeleton", "vertex_bound"]


class CapExceeded(RuntimeError):
    """The obstacle is too large for an exhaustive check."""


_BRUTE_VERTEX_CAP = 14


def vertex_bound(ob: Obstacle) -> int:
    """Proven ceiling on the minimum skeleton size: half the vertex
    count."""
    return ob.n // 2


# -- feature points ------------------------------------------------------------


def _bottom_reflex(ob: Obstacle) -> list[Point]:
    ps = ob.bottom_plateaus
    return [Point(ps[k][0], max(ps[k - 1][2], ps[k][2]))
            for k in range(1, len(ps))]


def _top_reflex(ob: Obstacle) -> list[Point]:
    ps = ob.top_plateaus
    return [Point(ps[k][0], min(ps[k - 1][2], ps[k][2]))
            for k in range(1, len(ps))]


def _corner_points(ob: Obstacle) -> dict[str, Point]:
    return {name: ob.corner_point(name) for name in ob.extreme_corners}


def _port_points(ob: Obstacle) -> list[Point]:
    corners = set(_corner_points(ob).values())
    out = []
    for name in ("left", "bottom", "right", "top"):
        e = ob.extreme[name]
        if e.a in corners or e.b in corners:
            continue
        out.extend((e.a, e.b))
    return sorted(set(out))


def _on_vertical_edge(ob: Obstacle, p: Point) -> bool:
    return any(e.is_vertical and point_on_segment(p, e) for e in ob.edges)


# -- candidate edges -----------------------------------------------------------


def _anchor_edges_frame(ob: Obstacle) -> list[Segment]:
    """Edges through a lower-chain reflex vertex: for each anchor, the
    ray toward its gradient-first visible upper-chain vertex, extended
    both ways, kept only when the far landing is on a vertical edge."""
    bots = _bottom_reflex(ob)
    tops = _top_reflex(ob)
    corner = ob.corner_point("tr") if "tr" in ob.extreme_corners else None
    out = []
    for b in bots:
        seen = []
        for t in tops:
            if t.x > b.x and t.y > b.y and \
                    ob.segment_in_obstacle(Segment(b, t)):
                seen.append((Fraction(t.y - b.y, t.x - b.x), t.x - b.x,
                             False, t))
        if corner is not None and corner.x > b.x and corner.y > b.y and \
                ob.segment_in_obstacle(Segment(b, corner)):
            seen.append((Fraction(corner.y - b.y, corner.x - b.x),
                         corner.x - b.x, True, corner))
        if not seen:
            continue
        seen.sort(key=lambda e: (e[0], e[1]))
        _, _, is_corner, t = seen[0]
        if is_corner:
            continue
        edge = ob.extend_through(b, t)
        far = edge.b if (edge.b.x, edge.b.y) > (edge.a.x, edge.a.y) \
            else edge.a
        if _on_vertical_edge(ob, far):
            out.append(edge.canonical())
    return out


_INWARD = {"bl": (1, 1), "br": (-1, 1), "tl": (1, -1), "tr": (-1, -1)}


def _pinned_edges(ob: Obstacle, anchor: Point,
                  directions: Iterable[tuple[int, int]]) -> list[Segment]:
    """All maximal edges pinned at a boundary anchor through any
    strictly diagonal visible feature vertex (any exit kind)."""
    targets = set(_bottom_reflex(ob)) | set(_top_reflex(ob)) \
        | set(_corner_points(ob).values())
    out = []
    for f in targets:
        dx, dy = f.x - anchor.x, f.y - anchor.y
        if dx == 0 or dy == 0:
            continue
        sgn = (1 if dx > 0 else -1, 1 if dy > 0 else -1)
        if sgn not in directions:
            continue
        if not ob.segment_in_obstacle(Segment(anchor, f)):
            continue
        out.append(ob.extend_through(anchor, f).canonical())
    return out


_CANON_FRAME = {ObstacleKind.STAIRCASE: "staircase",
                ObstacleKind.PARTIAL_STAIRCASE: "partial",
                ObstacleKind.GENERAL: "general"}


def brute_candidate_set(ob: Obstacle) -> list[Segment]:
    """The maximal-visibility-edge family, rebuilt from first
    principles: pairwise containment tests over boundary feature
    points instead of a rotational sweep.

    The family is anchored to the obstacle's construction frame (the
    sweep directions are stated for that orientation), so the obstacle
    is mapped there first and the edges back."""
    frame = _CANON_FRAME.get(classify(ob).kind)
    back = None
    if frame is not None:
        ob, t = canonicalize(ob, frame)
        back = t.inverse()
    edges: set[Segment] = set()
    edges.update(_anchor_edges_frame(ob))
    obT = ob.transformed(TRANSPOSE)
    edges.update(TRANSPOSE.apply_segment(s).canonical()
                 for s in _anchor_edges_frame(obT))
    for name, c in _corner_points(ob).items():
        edges.update(_pinned_edges(ob, c, [_INWARD[name]]))
    all_dirs = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    for p in _port_points(ob):
        edges.update(_pinned_edges(ob, p, all_dirs))
    if back is not None:
        edges = {back.apply_segment(s).canonical() for s in edges}
    return sorted(edges)


# -- extreme-edge pair visibility ----------------------------------------------


def brute_pair_visibility(ob: Obstacle, a: str, b: str) -> Optional[Segment]:
    """A segment inside the obstacle meeting both named extreme edges,
    found by trying every supporting line through two boundary feature
    points plus the axis-parallel span midlines, or None."""
    ea, eb = ob.extreme[a], ob.extreme[b]

    def witness(seg: Segment) -> Optional[Segment]:
        if segments_intersect(seg, ea) and segments_intersect(seg, eb):
            return seg.canonical()
        return None

    feats = set(_bottom_reflex(ob)) | set(_top_reflex(ob))
    for e in ob.extreme.values():
        feats.update((e.a, e.b))
    feats = sorted(feats)
    cands: list[Segment] = []
    for u, v in itertools.combinations(feats, 2):
        s = Segment(u, v)
        if ob.segment_in_obstacle(s):
            cands.append(ob.extend_through(u, v))
    lo, hi = ob.box
    for y in sorted({Fraction(p.y + q.y, 2)
                     for p in feats for q in feats}):
        sl = ob.closed_slice_y(y)
        if sl is not None and sl[0] < sl[1]:
            cands.append(Segment(Point(sl[0], y), Point(sl[1], y)))
    for x in sorted({Fraction(p.x + q.x, 2)
                     for p in feats for q in feats}):
        sl = ob.closed_slice_x(x)
        if sl is not None and sl[0] < sl[1]:
            cands.append(Segment(Point(x, sl[0]), Point(x, sl[1])))
    best = None
    for s in cands:
        w = witness(s)
        if w is not None and (best is None or
                              (-w.length_sq(), w) < (-best.length_sq(), best)):
            best = w
    return best


# -- minimum skeleton by exhaustion --------------------------------------------


def _oracle_valid(ob: Obstacle, edges: list[Segment], mode: str) -> bool:
    for name in ("left", "bottom", "right", "top"):
        ext = ob.extreme[name]
        if not any(segments_intersect(s, ext) for s in edges):
            return False
    n = len(edges)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if segments_intersect(edges[i], edges[j]):
                parent[find(i)] = find(j)
    comps: dict[int, list[Segment]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(edges[i])
    if len(comps) == 1:
        return True
    if mode == "connected":
        return False
    groups = list(comps.values())
    boxes = [bbox(g) for g in groups]

    def seg_box(s: Segment, bx) -> bool:
        lo, hi = bx
        if bx.contains(s.a) or bx.contains(s.b):
            return True
        cs = (lo, Point(hi.x, lo.y), hi, Point(lo.x, hi.y))
        return any(cs[i] != cs[(i + 1) % 4]
                   and segments_intersect(s, Segment(cs[i], cs[(i + 1) % 4]))
                   for i in range(4))

    k = len(groups)
    adj = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            ij = any(seg_box(s, boxes[j]) for s in groups[i])
            ji = any(seg_box(s, boxes[i]) for s in groups[j])
            adj[i][j] = adj[j][i] = ij and ji
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nxt in range(k):
            if adj[cur][nxt] and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == k


def _skeleton_pool(ob: Obstacle) -> list[Segment]:
    pool: set[Segment] = set(brute_candidate_set(ob))
    for name in ("left", "bottom", "right", "top"):
        e = ob.extreme[name]
        pool.add(e.canonical())
        if name in ("bottom", "top"):
            x = Fraction(e.a.x + e.b.x, 2)
            y0, y1 = ob.closed_slice_x(x)
            pool.add(Segment(Point(x, y0), Point(x, y1)).canonical())
        else:
            y = Fraction(e.a.y + e.b.y, 2)
            x0, x1 = ob.closed_slice_y(y)
            pool.add(Segment(Point(x0, y), Point(x1, y)).canonical())
    for a, b in itertools.combinations(("left", "bottom", "right", "top"), 2):
        w = brute_pair_visibility(ob, a, b)
        if w is not None:
            pool.add(w)
    for ca, cb in (("bl", "tr"), ("br", "tl")):
        d = Segment(ob.corner_point(ca), ob.corner_point(cb))
        if ob.segment_in_obstacle(d):
            pool.add(d.canonical())
    return sorted(pool)


def brute_force_min_skeleton(ob: Obstacle, mode: str = "weak",
                             size_limit: int = 6) \
        -> Optional[tuple[int, tuple[Segment, ...]]]:
    """Smallest valid skeleton drawn from the structured candidate
    pool, by exhaustive subset search in increasing cardinality.

    Returns (size, edges) or None when nothing within ``size_limit``
    works.  Refuses obstacles beyond the vertex cap."""
    if ob.n > _BRUTE_VERTEX_CAP:
        raise CapExceeded(f"{ob.n} vertices exceeds the exhaustive-search "
                          f"cap of {_BRUTE_VERTEX_CAP}")
    pool = _skeleton_pool(ob)
    exts = [ob.extreme[n] for n in ("left", "bottom", "right", "top")]
    masks = []
    for s in pool:
        m = 0
        for bit, ext in enumerate(exts):
            if segments_intersect(s, ext):
                m |= 1 << bit
        masks.append(m)
    idx = range(len(pool))
    for size in range(1, size_limit + 1):
        for combo in itertools.combinations(idx, size):
            m = 0
            for i in combo:
                m |= masks[i]
            if m != 15:
                continue
            edges = [pool[i] for i in combo]
            if _oracle_valid(ob, edges, mode):
                return (size, tuple(edges))
    return None


# -- randomized path probing ---------------------------------------------------


def probe_skeleton(ob: Obstacle, edges, seed: int = 0,
                   attempts: int = 200) -> Optional[tuple[Point, Point]]:
    """Search for a pair of outside points that the obstacle separates
    (every one-bend route between them cuts the interior) but the
    skeleton does not — a counterexample to the proxy guarantee.

    Probe coordinates land on odd sub-grid offsets of the bounding box
    inflated by its own width and height, so they avoid every feature
    line of integer-coordinate obstacles.  Returns the first
    counterexample in deterministic index order, or None."""
    E = list(edges)
    lo, hi = ob.box
    W, H = hi.x - lo.x, hi.y - lo.y
    nx, ny = 48, 48

    def sample(rng: SplitMix64) -> Optional[Point]:
        for _ in range(32):
            px = lo.x - W + 3 * W * Fraction(2 * rng.randrange(nx) + 1, 2 * nx)
            py = lo.y - H + 3 * H * Fraction(2 * rng.randrange(ny) + 1, 2 * ny)
            p = Point(px, py)
            if not ob.point_in_interior(p):
                return p
        return None

    for i in range(attempts):
        rng = SplitMix64(derive_seed(seed, i))
        p = sample(rng)
        q = sample(rng)
        if p is None or q is None or p == q:
            continue
        if obstacle_separates(ob, p, q) and not path_blocked(E, p, q):
            return (p, q)
    return None
