"""Random rectilinearly-convex obstacles of a requested kind and size.

The builder draws the chain layout (how many horizontal edges face down
versus up, and which of them lie on the bounding box), partitions the
box width and height into integer edge lengths, and walks the perimeter
counterclockwise.  Integer cut points are sampled without replacement,
and the two partitions sharing an axis draw from disjoint pools, so no
two distinct edges ever share a supporting line.  When the lower and
upper chains collide, the later-laid cut is re-sampled inside the
interval that restores simplicity; the whole construction is a pure
function of its parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .obstacle import Obstacle, ObstacleKind, classify, validate_obstacle
from .rng import SplitMix64

__all__ = ["GeneratorError", "GeneratorParams", "InfeasibleParams",
           "RetryLimitExceeded", "random_obstacle"]

_RETRY_CAP = 64

_KIND_ALIASES = {
    "l": ObstacleKind.L,
    "t": ObstacleKind.T,
    "staircase": ObstacleKind.STAIRCASE,
    "partial": ObstacleKind.PARTIAL_STAIRCASE,
    "partial_staircase": ObstacleKind.PARTIAL_STAIRCASE,
    "general": ObstacleKind.GENERAL,
}

# smallest half-vertex-count n for which the layout draw is nonempty
_MIN_N = {
    ObstacleKind.L: 3,
    ObstacleKind.T: 4,
    ObstacleKind.STAIRCASE: 4,
    ObstacleKind.PARTIAL_STAIRCASE: 5,
    ObstacleKind.GENERAL: 6,
}


class GeneratorError(RuntimeError):
    """Base class for generator failures."""


class InfeasibleParams(GeneratorError, ValueError):
    """The requested kind/size/box combination admits no obstacle."""


class RetryLimitExceeded(GeneratorError):
    """Re-sampling budget exhausted while repairing a construction."""


def _coerce_kind(kind) -> ObstacleKind:
    if not isinstance(kind, ObstacleKind):
        name = str(kind).strip().lower()
        if name == "rectangle":
            kind = ObstacleKind.RECTANGLE
        else:
            try:
                kind = _KIND_ALIASES[name]
            except KeyError:
                raise InfeasibleParams(
                    f"unknown obstacle kind {kind!r}") from None
    if kind is ObstacleKind.RECTANGLE:
        raise InfeasibleParams(
            "rectangles are determined by their bounding box; "
            "no randomness to draw")
    return kind


@dataclass(frozen=True)
class GeneratorParams:
    """Inputs of the random-obstacle builder.

    ``vertex_count`` is the total number of polygon vertices (even,
    at least 6); the box is (0,0)-(width,height); ``length_law`` picks
    how edge lengths are distributed: "uniform" (sorted distinct
    uniform cuts) or "exponential" (a few long edges dominate).
    """

    kind: ObstacleKind
    vertex_count: int
    width: int
    height: int
    seed: int = 0
    length_law: str = "uniform"

    def __post_init__(self):
        object.__setattr__(self, "kind", _coerce_kind(self.kind))
        if self.vertex_count % 2 or self.vertex_count < 6:
            raise InfeasibleParams(
                f"vertex_count must be even and >= 6, got {self.vertex_count}")
        n = self.vertex_count // 2
        if n < _MIN_N[self.kind]:
            raise InfeasibleParams(
                f"{self.kind.value} obstacles need at least "
                f"{2 * _MIN_N[self.kind]} vertices, got {self.vertex_count}")
        if self.width < n or self.height < n:
            raise InfeasibleParams(
                f"box {self.width}x{self.height} too small for {n} edges "
                "per axis (needs width >= n and height >= n)")
        if self.length_law not in ("uniform", "exponential"):
            raise InfeasibleParams(
                f"unknown length_law {self.length_law!r}")

    @property
    def n(self) -> int:
        return self.vertex_count // 2


def _draw_layout(rng: SplitMix64, kind: ObstacleKind, n: int):
    """Chain layout (n_b, n_t, i_b, i_t): how many horizontal edges face
    down/up and which of them are the extreme ones (labels increase left
    to right from 1)."""
    if kind is ObstacleKind.L:
        return 1, n - 1, 1, 1
    if kind is ObstacleKind.T:
        nb = n - 1
        return nb, 1, rng.randint(2, nb - 1), 1
    if kind is ObstacleKind.STAIRCASE:
        nb = rng.randint(2, n - 2)
        return nb, n - nb, 1, n - nb
    if kind is ObstacleKind.PARTIAL_STAIRCASE:
        nb = rng.randint(3, n - 2)
        return nb, n - nb, rng.randint(2, nb - 1), n - nb
    nb = rng.randint(3, n - 3)
    nt = n - nb
    return nb, nt, rng.randint(2, nb - 1), rng.randint(2, nt - 1)


def _expo_cuts(rng: SplitMix64, k: int, span: int):
    """k interior cuts of [0, span] whose segment lengths follow an
    exponential law, repaired to strictly increasing integers; None when
    the rounding repair runs out of room."""
    if k == 0:
        return []
    lengths = [-math.log(1.0 - rng.float01()) for _ in range(k + 1)]
    total = sum(lengths)
    cuts, acc = [], 0.0
    for i in range(k):
        acc += lengths[i]
        cuts.append(round(acc / total * span))
    prev = 0
    for i, c in enumerate(cuts):
        c = max(c, prev + 1)
        cuts[i] = c
        prev = c
    return cuts if cuts[-1] <= span - 1 else None


def _partition_pair(rng: SplitMix64, k1: int, k2: int, span: int, law: str):
    """Sorted interior cut lists for two partitions of [0, span] into
    k1+1 and k2+1 segments, every cut distinct across both."""
    if law == "uniform":
        joint = rng.sample_distinct(k1 + k2, 1, span - 1)
        if k1 == 0:
            return [], joint
        if k2 == 0:
            return joint, []
        idx = set(rng.sample_distinct(k1, 0, k1 + k2 - 1))
        return ([v for i, v in enumerate(joint) if i in idx],
                [v for i, v in enumerate(joint) if i not in idx])
    for _ in range(_RETRY_CAP):
        a = _expo_cuts(rng, k1, span)
        b = _expo_cuts(rng, k2, span)
        if a is not None and b is not None and not (set(a) & set(b)):
            return a, b
    raise RetryLimitExceeded(
        f"could not draw disjoint exponential cuts in a span of {span}")


@dataclass
class _Layout:
    """One assembled candidate: edge heights derived from the cut pools."""

    nb: int
    nt: int
    ib: int
    it: int
    h: int
    yl: list = field(default_factory=list)  # left-pool levels, ascending
    yr: list = field(default_factory=list)  # right-pool levels, ascending

    def bottom_height(self, j: int) -> int:
        if j == self.ib:
            return 0
        if j < self.ib:
            return self.yl[self.ib - j - 1]
        return self.yr[j - self.ib - 1]

    def top_height(self, j: int) -> int:
        if j == self.it:
            return self.h
        if j < self.it:
            return self.yl[self.ib + j - 2]
        return self.yr[self.nb - self.ib + self.nt - j]


def _chains_collide(xb, xt, lay: _Layout) -> bool:
    """Whether the lower chain meets or crosses the upper chain
    anywhere (scan of the merged elementary x-intervals)."""
    bi, ti = 1, 1
    while bi <= lay.nb and ti <= lay.nt:
        if lay.bottom_height(bi) >= lay.top_height(ti):
            return True
        bnext = xb[bi]
        tnext = xt[ti]
        if bnext <= tnext:
            bi += 1
        if tnext <= bnext:
            ti += 1
    return False


def _max_lower_under(xb, xt, lay: _Layout, tj: int) -> int:
    """Largest settled lower-chain level under top edge tj's span.
    Only the right-pool plateaus (labels >= i_b) can bind: lower-left
    levels sit below every upper-left level by pool order."""
    x0, x1 = xt[tj - 1], xt[tj]
    vals = [lay.bottom_height(j) for j in range(lay.ib, lay.nb + 1)
            if xb[j - 1] < x1 and xb[j] > x0]
    return max(vals) if vals else 0


def _min_upper_over(xb, xt, lay: _Layout, bj: int) -> int:
    """Smallest upper-chain level over bottom edge bj's span."""
    x0, x1 = xb[bj - 1], xb[bj]
    return min(lay.top_height(j) for j in range(1, lay.nt + 1)
               if xt[j - 1] < x1 and xt[j] > x0)


def _repair(rng: SplitMix64, xb, xt, lay: _Layout, nl: int) -> bool:
    """Re-sample left-pool cuts so the chains clear each other, keeping
    every cut that already fits.  Returns False when the current pools
    admit no simple assignment at all (integer crowding).

    Collisions are always cross-side (each pool's own levels are
    ordered), so every conflicting level belongs to the left pool, the
    later-laid side of the walk.  A conflicting cut is re-drawn in the
    window between the blocking opposite-chain level and the next
    tentative cut of its own chain, so repaired cuts stay close to the
    opposite chain and the clearance statistics of the walk are
    preserved.  When integer crowding empties that local window, the cut
    is pinned to the nearest free level beside the blocker instead.
    Exact greedy caps from above (for the upper-left chain) and floors
    from below (for the lower-left chain) certify feasibility, so one
    pass per chain succeeds whenever a simple assignment exists at
    all."""
    ib, h = lay.ib, lay.h
    taken = set(lay.yr)

    ks = list(range(ib, nl))  # 1-based upper-left cut indices
    needs = {k: _max_lower_under(xb, xt, lay, k - ib + 1) for k in ks}
    caps = {}
    bound = h
    for k in reversed(ks):
        v = bound - 1
        while v in taken:
            v -= 1
        if v <= needs[k]:
            return False
        caps[k] = v
        bound = v
    prev = lay.yl[ib - 2] if ib >= 2 else 0
    for k in ks:
        lo = max(prev, needs[k])
        tv = lay.yl[k - 1]
        if not (lo < tv <= caps[k]):
            nxt = lay.yl[k] if k < nl - 1 else h
            cands = [v for v in range(lo + 1, min(caps[k] + 1, nxt))
                     if v not in taken]
            if cands:
                lay.yl[k - 1] = cands[rng.randrange(len(cands))]
            else:
                v = lo + 1
                while v in taken:
                    v += 1
                if v > caps[k]:
                    return False
                lay.yl[k - 1] = v
        prev = lay.yl[k - 1]

    ks = list(range(1, ib))  # 1-based lower-left cut indices
    needs = {k: _min_upper_over(xb, xt, lay, ib - k) for k in ks}
    floors = {}
    bound = 0
    for k in ks:
        v = bound + 1
        while v in taken:
            v += 1
        if v >= needs[k]:
            return False
        floors[k] = v
        bound = v
    nxt = lay.yl[ib - 1] if ib - 1 < len(lay.yl) else h
    for k in reversed(ks):
        lo = floors[k - 1] if k >= 2 else 0
        hi = min(needs[k], nxt)
        tv = lay.yl[k - 1]
        if not (lo < tv < hi):
            prv = lay.yl[k - 2] if k >= 2 else 0
            cands = [v for v in range(max(lo, prv) + 1, hi)
                     if v not in taken]
            if cands:
                lay.yl[k - 1] = cands[rng.randrange(len(cands))]
            else:
                v = hi - 1
                while v in taken:
                    v -= 1
                if v <= lo:
                    return False
                lay.yl[k - 1] = v
        nxt = lay.yl[k - 1]
    return True


def random_obstacle(params: GeneratorParams) -> Obstacle:
    """Build a random rectilinearly-convex obstacle of ``params.kind``
    with exactly ``params.vertex_count`` vertices and bounding box
    (0,0)-(width,height).  Deterministic in ``params``."""
    n, w, h = params.n, params.width, params.height
    rng = SplitMix64(params.seed)
    nb, nt, ib, it = _draw_layout(rng, params.kind, n)
    nl = (ib - 1) + (it - 1) + 1
    nr = n - nl

    bcuts, tcuts = _partition_pair(rng, nb - 1, nt - 1, w, params.length_law)
    xb = [0] + bcuts + [w]
    xt = [0] + tcuts + [w]

    lay = _Layout(nb, nt, ib, it, h)
    lay.yl, lay.yr = _partition_pair(rng, nl - 1, nr - 1, h,
                                     params.length_law)

    # Only integer crowding (the pools admit no simple assignment at
    # all) forces a full redraw of the height partitions, capped by the
    # retry budget.
    redraws = _RETRY_CAP
    while not (_repair(rng, xb, xt, lay, nl)
               and not _chains_collide(xb, xt, lay)):
        if redraws == 0:
            raise RetryLimitExceeded(
                f"chain-collision repair budget exhausted for {params}")
        redraws -= 1
        lay.yl, lay.yr = _partition_pair(rng, nl - 1, nr - 1, h,
                                         params.length_law)

    verts: list[tuple[int, int]] = []
    for j in range(ib, nb + 1):
        y = lay.bottom_height(j)
        verts.append((xb[j - 1], y))
        verts.append((xb[j], y))
    for j in range(nt, 0, -1):
        y = lay.top_height(j)
        verts.append((xt[j], y))
        verts.append((xt[j - 1], y))
    for j in range(1, ib):
        y = lay.bottom_height(j)
        verts.append((xb[j - 1], y))
        verts.append((xb[j], y))

    ob = validate_obstacle(verts)
    got = classify(ob).kind
    if got is not params.kind:
        raise GeneratorError(
            f"built a {got.value} obstacle while aiming for "
            f"{params.kind.value}; layout nb={nb} nt={nt} ib={ib} it={it}")
    return ob
