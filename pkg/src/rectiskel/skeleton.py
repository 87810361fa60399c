"""Skeleton construction and verification.

A skeleton of a rectilinearly-convex obstacle is a small set of
segments inside it that separates two outside points — every
axis-parallel route between them with at most one bend touches an edge
— exactly when the obstacle itself separates them.
``compute_skeleton`` builds a provably smallest one (per obstacle
type); ``validate_skeleton`` checks the certifying conditions; and
``path_blocked`` answers the proxy intersection query the skeleton
exists to serve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .geom import (Box, Point, Segment, bbox, point_on_segment,
                   segments_intersect)
from .obstacle import (GeneralSubtype, Obstacle, ObstacleKind, classify,
                       canonicalize)
from .visibility import (Frontier, _candidates_canonical, _rot180,
                         advancement, auxiliary_edge, extreme_pair_visibility,
                         frontiers, maximal_extreme_edge,
                         perpendicular_extreme_edge)

__all__ = ["Skeleton", "SkeletonError", "compute_skeleton",
           "obstacle_separates", "path_blocked", "validate_skeleton"]


class SkeletonError(RuntimeError):
    """Construction failed to make progress (indicates a bug or an
    input outside the supported family)."""


@dataclass(frozen=True)
class Skeleton:
    """Result of :func:`compute_skeleton`: edges in original
    coordinates, canonically ordered."""

    obstacle: Obstacle
    edges: tuple[Segment, ...]
    mode: str

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)


# -- verification -------------------------------------------------------------


def _seg_box_intersect(s: Segment, box: Box) -> bool:
    if box.contains(s.a) or box.contains(s.b):
        return True
    lo, hi = box
    corners = (lo, Point(hi.x, lo.y), hi, Point(lo.x, hi.y))
    for i in range(4):
        a, b = corners[i], corners[(i + 1) % 4]
        if a == b:
            continue
        if segments_intersect(s, Segment(a, b)):
            return True
    if lo == hi:
        return point_on_segment(lo, s)
    return False


def _components(edges: Sequence[Segment]) -> list[list[int]]:
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
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comps: dict[int, list[int]] = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    return list(comps.values())


def validate_skeleton(ob: Obstacle, edges: Iterable[Segment]) \
        -> tuple[bool, tuple[str, ...]]:
    """Certify a skeleton: every edge inside the obstacle, every
    extreme edge met, and the components pairwise weakly connected
    (each reaching into the other's bounding box) so that the component
    graph is connected."""
    E = [s.canonical() for s in edges]
    reasons: list[str] = []
    if not E:
        return (False, ("no edges",))
    for s in E:
        if not ob.segment_in_obstacle(s):
            reasons.append(f"edge {s} leaves the obstacle")
    for name in ("left", "bottom", "right", "top"):
        ext = ob.extreme[name]
        if not any(segments_intersect(s, ext) for s in E):
            reasons.append(f"{name} extreme edge not intersected")
    comps = _components(E)
    if len(comps) > 1:
        boxes = [bbox([E[i] for i in comp]) for comp in comps]
        k = len(comps)
        adj: list[set[int]] = [set() for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                ij = any(_seg_box_intersect(E[a], boxes[j]) for a in comps[i])
                ji = any(_seg_box_intersect(E[b], boxes[i]) for b in comps[j])
                if ij and ji:
                    adj[i].add(j)
                    adj[j].add(i)
        seen = {0}
        stack = [0]
        while stack:
            for nxt in adj[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != k:
            reasons.append("components not weakly connected")
    return (not reasons, tuple(reasons))


# -- proxy queries ------------------------------------------------------------


def _path_embeddings(p: Point, q: Point) -> list[list[Segment]]:
    if p == q:
        return []
    if p.x == q.x or p.y == q.y:
        return [[Segment(p, q)]]
    c1, c2 = Point(p.x, q.y), Point(q.x, p.y)
    return [[Segment(p, c1), Segment(c1, q)],
            [Segment(p, c2), Segment(c2, q)]]


def _leg_hits_interior(ob: Obstacle, leg: Segment) -> bool:
    if leg.is_horizontal:
        return ob.hleg_hits_interior(leg.a.y, min(leg.a.x, leg.b.x),
                                     max(leg.a.x, leg.b.x))
    return ob.vleg_hits_interior(leg.a.x, min(leg.a.y, leg.b.y),
                                 max(leg.a.y, leg.b.y))


def obstacle_separates(ob: Obstacle, p: Point, q: Point) -> bool:
    """True when every at-most-one-bend axis-parallel route from p to q
    cuts the obstacle's interior, so the two points cannot be joined by
    a straight segment or a single L without crossing it."""
    p = p if isinstance(p, Point) else Point(*p)
    q = q if isinstance(q, Point) else Point(*q)
    embs = _path_embeddings(p, q)
    if not embs:
        return False
    return all(any(_leg_hits_interior(ob, leg) for leg in emb)
               for emb in embs)


def path_blocked(edges: Iterable[Segment], p: Point, q: Point) -> bool:
    """True when every at-most-one-bend axis-parallel route from p to q
    touches a skeleton edge.

    The proxy guarantee is pairwise, not per route: a single route may
    cut the obstacle yet miss the edges, but then the bend in the other
    direction clears the obstacle entirely.  What a valid skeleton
    promises is that whenever :func:`obstacle_separates` holds for two
    points outside the obstacle, this test holds as well."""
    E = list(edges)
    p = p if isinstance(p, Point) else Point(*p)
    q = q if isinstance(q, Point) else Point(*q)
    embs = _path_embeddings(p, q)
    if not embs:
        return False
    return all(any(segments_intersect(leg, s) for leg in emb for s in E)
               for emb in embs)


# -- greedy frontier fill -----------------------------------------------------


def _coverage(edges: Sequence[Segment]):
    xs = [v for s in edges for v in (s.a.x, s.b.x)]
    ys = [v for s in edges for v in (s.a.y, s.b.y)]
    return (min(xs), max(xs)), (min(ys), max(ys))


def _rank(cands: list[Segment], cov_h, cov_v,
          frontier: Optional[Frontier]) -> list[tuple]:
    """Contest key per candidate: advancement pair oriented by the
    frontier (a horizontal front wants vertical progress first), then
    length; lexicographic endpoint order breaks remaining ties."""
    orient = "both"
    if frontier is not None and len(frontier.segments) == 1:
        orient = "v" if frontier.segments[0].is_horizontal else "h"
    out = []
    for s in cands:
        dh, dv = advancement(s, cov_h, cov_v)
        if orient == "v":
            key = (dv, dh)
        elif orient == "h":
            key = (dh, dv)
        else:
            key = max((dv, dh), (dh, dv))
        out.append((key, s))
    return out


def _pick(ranked: list[tuple]) -> Segment:
    best_key = None
    best: Optional[Segment] = None
    for key, s in ranked:
        full = (key[0], key[1], s.length_sq())
        if best_key is None or full > best_key or \
                (full == best_key and s.canonical() < best.canonical()):
            best_key, best = full, s
    return best


def _fill(ob: Obstacle, G: Sequence[Segment], seed: Sequence[Segment],
          target: tuple, mode: str,
          start_corner: Optional[Point] = None) -> list[Segment]:
    """Grow a staircase-style skeleton from ``seed`` until an added
    edge reaches ``target`` (("point", p) or ("segments", segs)).

    Each round ranks the live candidates by how far they push the
    covered intervals past the current frontier; the weak variant may
    also mint auxiliary edges pinned at frontier endpoints, while the
    connected variant restricts candidates to ones touching the
    skeleton built so far."""

    def touches(s: Segment) -> bool:
        if target[0] == "point":
            return point_on_segment(target[1], s)
        return any(segments_intersect(s, t) for t in target[1])

    S = [s.canonical() for s in seed]
    for s in S:
        if touches(s):
            return S
    alive = [s for s in G if s not in set(S)]
    aux_pool: list[Segment] = []
    aux_done: set[Point] = set()
    # Candidates known to touch the skeleton so far, maintained
    # incrementally: each skeleton edge propagates its links once.
    linked: set[Segment] = set()
    linked_upto = 0

    if not S:
        assert start_corner is not None
        opening = [s for s in alive if point_on_segment(start_corner, s)]
        if not opening:
            raise SkeletonError("no candidate at the start corner")
        cov0 = ((start_corner.x, start_corner.x),
                (start_corner.y, start_corner.y))
        best = _pick(_rank(opening, cov0[0], cov0[1], None))
        S.append(best)
        alive.remove(best)
        if touches(best):
            return S

    for _ in range(4 * (len(G) + ob.n + 4)):
        cov_h, cov_v = _coverage(S)
        fronts = frontiers(ob, S)
        if not fronts:
            # The box of S swallowed the whole region before any edge
            # reached the target: the last edge overshot sideways into
            # the far extreme edge, which completes the skeleton just
            # as well.
            if all(any(segments_intersect(s, e) for s in S)
                   for e in ob.extreme.values()):
                return S
            raise SkeletonError("frontier vanished before completion")
        if len(fronts) != 1:
            raise SkeletonError(f"expected one frontier, got {len(fronts)}")
        f = fronts[0]

        def dead(s: Segment) -> bool:
            return (cov_h[0] <= min(s.a.x, s.b.x)
                    and max(s.a.x, s.b.x) <= cov_h[1]
                    and cov_v[0] <= min(s.a.y, s.b.y)
                    and max(s.a.y, s.b.y) <= cov_v[1])

        alive = [s for s in alive if not dead(s)]
        aux_pool = [s for s in aux_pool if not dead(s)]

        if mode == "weak":
            for p in f.endpoints():
                if p in aux_done or not ob.point_on_boundary(p):
                    continue
                if any(point_on_segment(p, s) for s in S):
                    continue
                aux_done.add(p)
                for s in auxiliary_edge(ob, p):
                    if s not in aux_pool and s not in alive and not dead(s):
                        aux_pool.append(s)
            cands = [s for s in alive + aux_pool if f.intersects(s)]
        else:
            while linked_upto < len(S):
                e = S[linked_upto]
                linked_upto += 1
                linked.update(s for s in alive
                              if s not in linked
                              and segments_intersect(s, e))
            cands = [s for s in alive if s in linked]
        if not cands:
            raise SkeletonError("no candidate advances the frontier")
        ranked = _rank(cands, cov_h, cov_v, f)
        best = _pick(ranked)
        bh, bv = advancement(best, cov_h, cov_v)
        if bh == 0 and bv == 0:
            finishers = [s for s in cands if touches(s)]
            if not finishers:
                raise SkeletonError("stalled without reaching the target")
            best = _pick(_rank(finishers, cov_h, cov_v, f))
        S.append(best)
        if best in alive:
            alive.remove(best)
        if best in aux_pool:
            aux_pool.remove(best)
        if touches(best):
            return S
    raise SkeletonError("fill did not converge")


# -- per-kind recipes ---------------------------------------------------------


_MIDDLE_EDGES = {"bl": ("left", "bottom"), "br": ("right", "bottom"),
                 "tl": ("left", "top"), "tr": ("right", "top")}
_OPP_CORNER = {"bl": "tr", "tr": "bl", "br": "tl", "tl": "br"}


def _rectangle(ob: Obstacle, mode: str) -> list[Segment]:
    return [Segment(ob.box.lo, ob.box.hi)]


def _ell(ob: Obstacle, mode: str) -> list[Segment]:
    pres = set(ob.extreme_corners)
    if {"bl", "tr"} <= pres:
        diag = Segment(ob.corner_point("bl"), ob.corner_point("tr"))
    else:
        diag = Segment(ob.corner_point("tl"), ob.corner_point("br"))
    if ob.segment_in_obstacle(diag):
        return [diag]
    mid = next(c for c in pres if _OPP_CORNER[c] not in pres)
    return [ob.extreme[n] for n in _MIDDLE_EDGES[mid]]


def _tee(ob: Obstacle, mode: str) -> list[Segment]:
    corners = {ob.corner_point(c) for c in ob.extreme_corners}
    dc = next(n for n in ("left", "bottom", "right", "top")
              if {ob.extreme[n].a, ob.extreme[n].b} <= corners)
    opp = {"left": "right", "right": "left",
           "bottom": "top", "top": "bottom"}[dc]
    return [ob.extreme[dc], perpendicular_extreme_edge(ob, opp)]


def _staircase(ob: Obstacle, mode: str) -> list[Segment]:
    diag = Segment(ob.box.lo, ob.box.hi)
    if ob.segment_in_obstacle(diag):
        return [diag]
    G = _candidates_canonical(ob)
    return _fill(ob, G, [], ("point", ob.box.hi), mode,
                 start_corner=ob.box.lo)


def _partial(ob: Obstacle, mode: str) -> list[Segment]:
    w13 = extreme_pair_visibility(ob, "left", "right")
    w24 = extreme_pair_visibility(ob, "bottom", "top")
    if w13 is not None and w24 is not None:
        return [w13, w24]
    corner = ob.corner_point("tr")
    w12 = extreme_pair_visibility(ob, "left", "bottom")
    G = _candidates_canonical(ob)
    if w12 is not None:
        seed = [w12]
    else:
        seed = [maximal_extreme_edge(ob, "left", G),
                maximal_extreme_edge(ob, "bottom", G)]
    return _fill(ob, G, seed, ("point", corner), mode)


def _general_end_seed(ob: Obstacle, G: Sequence[Segment]) -> list[Segment]:
    """Seed covering the left/bottom end: the mutual-visibility witness
    when the pair sees each other, otherwise one maximal edge per
    extreme edge."""
    w12 = extreme_pair_visibility(ob, "left", "bottom")
    if w12 is not None:
        return [w12]
    return [maximal_extreme_edge(ob, "left", G),
            maximal_extreme_edge(ob, "bottom", G)]


_ADJ_ORDER = (("left", "bottom"), ("bottom", "right"),
              ("right", "top"), ("left", "top"))
_OTHER_TWO = {("left", "bottom"): ("right", "top"),
              ("bottom", "right"): ("left", "top"),
              ("right", "top"): ("left", "bottom"),
              ("left", "top"): ("bottom", "right")}


def _general(ob: Obstacle, mode: str) -> list[Segment]:
    sub = classify(ob).subtype
    w13 = extreme_pair_visibility(ob, "left", "right")
    w24 = extreme_pair_visibility(ob, "bottom", "top")
    if w13 is not None and w24 is not None:
        assert segments_intersect(w13, w24)
        return [w13, w24]
    if w13 is not None or w24 is not None:
        if w13 is not None:
            return [w13, perpendicular_extreme_edge(ob, "bottom"),
                    perpendicular_extreme_edge(ob, "top")]
        return [w24, perpendicular_extreme_edge(ob, "left"),
                perpendicular_extreme_edge(ob, "right")]
    if sub is not GeneralSubtype.D:
        for pair in _ADJ_ORDER:
            w = extreme_pair_visibility(ob, *pair)
            if w is not None:
                o1, o2 = _OTHER_TWO[pair]
                return [w, perpendicular_extreme_edge(ob, o1),
                        perpendicular_extreme_edge(ob, o2)]
        assert sub is GeneralSubtype.C
        return [perpendicular_extreme_edge(ob, n)
                for n in ("left", "bottom", "right", "top")]
    # positively sloped ends: left/bottom pairs with right/top
    w14 = extreme_pair_visibility(ob, "left", "top")
    if w14 is not None:
        return [w14, perpendicular_extreme_edge(ob, "bottom"),
                perpendicular_extreme_edge(ob, "right")]
    w23 = extreme_pair_visibility(ob, "bottom", "right")
    if w23 is not None:
        return [w23, perpendicular_extreme_edge(ob, "left"),
                perpendicular_extreme_edge(ob, "top")]
    G = _candidates_canonical(ob)
    s12 = _general_end_seed(ob, G)
    rot = _rot180(ob)
    obR = ob.transformed(rot)
    s34 = [rot.apply_segment(s).canonical()
           for s in _general_end_seed(obR, _candidates_canonical(obR))]
    both = s12 + s34
    if mode == "weak":
        ok, _ = validate_skeleton(ob, both)
        if ok:
            return both
        target = ("segments",
                  tuple(s for f in frontiers(ob, s34) for s in f.segments))
    else:
        if len(_components(both)) == 1:
            return both
        target = ("segments", tuple(s34))
    grown = _fill(ob, G, s12, target, mode)
    return grown + [s for s in s34 if s not in grown]


def _connect(ob: Obstacle, edges: list[Segment],
             pool: Sequence[Segment]) -> list[Segment]:
    """Add pool edges until the intersection graph has one component
    (used by the connected variant on recipe-built skeletons)."""
    edges = list(edges)
    while True:
        comps = _components(edges)
        if len(comps) <= 1:
            return edges
        best = None
        best_key = None
        for s in pool:
            if s in edges:
                continue
            hit = sum(1 for comp in comps
                      if any(segments_intersect(s, edges[i]) for i in comp))
            if hit < 2:
                continue
            key = (hit, s.length_sq())
            if best_key is None or key > best_key or \
                    (key == best_key and s.canonical() < best.canonical()):
                best, best_key = s, key
        if best is None:
            raise SkeletonError("cannot connect skeleton components")
        edges.append(best)


_CANON_TARGET = {ObstacleKind.STAIRCASE: "staircase",
                 ObstacleKind.PARTIAL_STAIRCASE: "partial",
                 ObstacleKind.GENERAL: "general"}

_RECIPES = {ObstacleKind.RECTANGLE: _rectangle,
            ObstacleKind.L: _ell,
            ObstacleKind.T: _tee,
            ObstacleKind.STAIRCASE: _staircase,
            ObstacleKind.PARTIAL_STAIRCASE: _partial,
            ObstacleKind.GENERAL: _general}


def compute_skeleton(ob: Obstacle, mode: str = "weak") -> Skeleton:
    """Construct a minimum skeleton.

    ``mode`` ``weak`` asks only for the weak connectivity the validity
    theorem needs; ``connected`` forces the edges themselves to form
    one intersecting component (possibly at a larger minimum size).
    """
    if mode not in ("weak", "connected"):
        raise ValueError(f"unknown mode {mode!r}")
    kind = classify(ob).kind
    target = _CANON_TARGET.get(kind)
    if target is None:
        edges = _RECIPES[kind](ob, mode)
        back = None
    else:
        obC, t = canonicalize(ob, target)
        edges = _RECIPES[kind](obC, mode)
        if mode == "connected" and len(_components(edges)) > 1:
            pool = list(_candidates_canonical(obC))
            pool += [perpendicular_extreme_edge(obC, n)
                     for n in ("left", "bottom", "right", "top")]
            edges = _connect(obC, edges, pool)
        back = t.inverse()
    if back is not None:
        edges = [back.apply_segment(s) for s in edges]
    if mode == "connected" and len(_components(edges)) > 1:
        raise SkeletonError("connected construction left several components")
    out = tuple(sorted({s.canonical() for s in edges}))
    ok, reasons = validate_skeleton(ob, out)
    if not ok:
        raise SkeletonError("constructed skeleton failed validation: "
                            + "; ".join(reasons))
    return Skeleton(obstacle=ob, edges=out, mode=mode)
