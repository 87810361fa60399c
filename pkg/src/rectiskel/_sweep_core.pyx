# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Rotational plane-sweep engine, compiled twin of ``_sweep_py``.

Operates on integer-coordinate frames only (the dispatcher falls back
to the pure implementation for rational frames or oversized
coordinates).  Exit points along a fixed ray keep a constant
denominator — the ray's run for vertex landings, its rise for
plateau crossings — so every coordinate is an exact 64-bit fraction;
gradient comparisons cross-multiply in 128-bit.  Results are returned
as ``(xn1, xd1, yn1, yd1, xn2, xd2, yn2, yd2)`` numerator/denominator
quads in lowest terms.
"""

from libc.stdlib cimport free, malloc, qsort

ctypedef long long i64
cdef extern from *:
    ctypedef long long i128 "__int128"


# -- frame ---------------------------------------------------------------------

cdef struct Frame:
    i64 *bx
    i64 *bv
    int nb          # number of lower plateaus; bx holds nb + 1 breaks
    i64 *tx
    i64 *tv
    int nt
    i64 *brx        # lower-chain reflex vertices, ascending x
    i64 *bry
    int nbr
    i64 *trx        # upper-chain reflex vertices, ascending x
    i64 *try_
    int ntr
    i64 *merged     # interior breaks of both chains plus x_max, ascending
    int nm
    i64 x_min
    i64 x_max
    i64 cx
    i64 cy
    int has_corner


cdef int _bisect_right(i64 *a, int n, i64 x) noexcept nogil:
    cdef int lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if x < a[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


cdef int _bisect_left(i64 *a, int n, i64 x) noexcept nogil:
    cdef int lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline i64 _b_right(Frame *fr, i64 x) noexcept nogil:
    cdef int i = _bisect_right(fr.bx, fr.nb + 1, x)
    if i > fr.nb:
        i = fr.nb
    return fr.bv[i - 1]


cdef inline i64 _b_left(Frame *fr, i64 x) noexcept nogil:
    cdef int i = _bisect_left(fr.bx, fr.nb + 1, x)
    if i < 1:
        i = 1
    return fr.bv[i - 1]


cdef inline i64 _t_right(Frame *fr, i64 x) noexcept nogil:
    cdef int i = _bisect_right(fr.tx, fr.nt + 1, x)
    if i > fr.nt:
        i = fr.nt
    return fr.tv[i - 1]


cdef inline i64 _t_left(Frame *fr, i64 x) noexcept nogil:
    cdef int i = _bisect_left(fr.tx, fr.nt + 1, x)
    if i < 1:
        i = 1
    return fr.tv[i - 1]


cdef int _cmp_i64(const void *pa, const void *pb) noexcept nogil:
    cdef i64 a = (<const i64 *> pa)[0]
    cdef i64 b = (<const i64 *> pb)[0]
    if a < b:
        return -1
    return 1 if a > b else 0


cdef int _frame_init(Frame *fr, list bx, list bv, list tx, list tv,
                     i64 cx, i64 cy, int has_corner) except -1:
    """Allocate and fill one frame from Python break/value lists."""
    cdef int nb = len(bv), nt = len(tv), k, m, w
    if len(bx) != nb + 1 or len(tx) != nt + 1 or nb < 1 or nt < 1:
        raise ValueError("malformed envelope arrays")
    fr.nb = nb
    fr.nt = nt
    fr.cx = cx
    fr.cy = cy
    fr.has_corner = has_corner
    cdef int total = (nb + 1) + nb + (nt + 1) + nt \
        + 3 * (nb - 1) + 3 * (nt - 1) + 1
    fr.bx = <i64 *> malloc(total * sizeof(i64))
    if fr.bx == NULL:
        raise MemoryError()
    fr.bv = fr.bx + (nb + 1)
    fr.tx = fr.bv + nb
    fr.tv = fr.tx + (nt + 1)
    fr.brx = fr.tv + nt
    fr.bry = fr.brx + (nb - 1)
    fr.trx = fr.bry + (nb - 1)
    fr.try_ = fr.trx + (nt - 1)
    fr.merged = fr.try_ + (nt - 1)
    for k in range(nb + 1):
        fr.bx[k] = bx[k]
    for k in range(nb):
        fr.bv[k] = bv[k]
    for k in range(nt + 1):
        fr.tx[k] = tx[k]
    for k in range(nt):
        fr.tv[k] = tv[k]
    fr.x_min = fr.bx[0]
    fr.x_max = fr.bx[nb]
    fr.nbr = nb - 1
    for k in range(1, nb):
        fr.brx[k - 1] = fr.bx[k]
        fr.bry[k - 1] = fr.bv[k - 1] if fr.bv[k - 1] > fr.bv[k] else fr.bv[k]
    fr.ntr = nt - 1
    for k in range(1, nt):
        fr.trx[k - 1] = fr.tx[k]
        fr.try_[k - 1] = fr.tv[k - 1] if fr.tv[k - 1] < fr.tv[k] else fr.tv[k]
    m = 0
    for k in range(1, nb):
        fr.merged[m] = fr.bx[k]
        m += 1
    for k in range(1, nt):
        fr.merged[m] = fr.tx[k]
        m += 1
    fr.merged[m] = fr.x_max
    m += 1
    qsort(fr.merged, m, sizeof(i64), _cmp_i64)
    w = 0
    for k in range(m):
        if w == 0 or fr.merged[k] != fr.merged[w - 1]:
            fr.merged[w] = fr.merged[k]
            w += 1
    fr.nm = w
    return 0


cdef void _frame_free(Frame *fr) noexcept nogil:
    if fr.bx != NULL:
        free(fr.bx)
        fr.bx = NULL


# -- exact exit points ---------------------------------------------------------

cdef struct Exit:
    i64 xn
    i64 xd
    i64 yn
    i64 yd
    int kind        # 0 vertical/vertex, 1 horizontal, 2 wall, 3 wall corner


cdef i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _set_frac(Exit *e, i64 xn, i64 xd, i64 yn, i64 yd,
                           int kind) noexcept nogil:
    cdef i64 g = _gcd(xn, xd)
    e.xn = xn // g
    e.xd = xd // g
    g = _gcd(yn, yd)
    e.yn = yn // g
    e.yd = yd // g
    e.kind = kind


cdef void _exit_forward(Frame *fr, i64 x0, i64 y0, i64 num, i64 den,
                        Exit *out) noexcept nogil:
    """First boundary crossing of the up-right ray from the integer
    point (x0, y0) with slope num/den (den > 0, num >= 0).

    A start point sitting exactly where the ceiling steps down to its
    height is already on its exit: every ascending ray leaves through
    that step immediately, a vertex landing on the step's face.
    """
    cdef i64 tr0 = _t_right(fr, x0)
    if y0 >= tr0 and tr0 < _t_left(fr, x0):
        _set_frac(out, x0, 1, y0, 1, 0)
        return
    cdef i64 xcur = x0, ycur_n = y0 * den   # y numerator over constant den
    cdef i64 a, tv, ya_n, br, tr
    cdef int i = _bisect_right(fr.merged, fr.nm, x0)
    while True:
        a = fr.merged[i] if i < fr.nm else fr.x_max
        i += 1
        tv = _t_right(fr, xcur)
        ya_n = ycur_n + num * (a - xcur)
        if ya_n > tv * den:
            # crosses the upper plateau inside the stretch (num > 0)
            _set_frac(out, x0 * num + den * (tv - y0), num, tv, 1, 1)
            return
        if a == fr.x_max:
            _set_frac(out, a, 1, ya_n, den,
                      3 if ya_n == _t_left(fr, a) * den else 2)
            return
        br = _b_right(fr, a)
        if br > _b_left(fr, a) and ya_n < br * den:
            _set_frac(out, a, 1, ya_n, den, 0)
            return
        tr = _t_right(fr, a)
        if tr < tv and ya_n >= tr * den:
            _set_frac(out, a, 1, ya_n, den, 0)
            return
        xcur = a
        ycur_n = ya_n


cdef void _exit_backward(Frame *fr, i64 x0, i64 y0, i64 num, i64 den,
                         Exit *out) noexcept nogil:
    """First boundary crossing of the ray from (x0, y0) going down and
    to the left along slope num/den (den > 0, num >= 0).

    The break list here is the merged list shifted one slot right with
    x_min in front, so the walk visits the left end of each stretch.
    """
    cdef i64 xcur = x0, ycur_n = y0 * den
    cdef i64 a, bv, ya_n, bl, tl
    cdef int j = _bisect_left(fr.merged, fr.nm, x0)
    while True:
        a = fr.merged[j - 1] if j >= 1 else fr.x_min
        j -= 1
        bv = _b_left(fr, xcur)
        ya_n = ycur_n - num * (xcur - a)
        if ya_n < bv * den:
            _set_frac(out, x0 * num - den * (y0 - bv), num, bv, 1, 1)
            return
        if a == fr.x_min:
            _set_frac(out, a, 1, ya_n, den, 2)
            return
        bl = _b_left(fr, a)
        if bl > bv and ya_n <= bl * den:
            _set_frac(out, a, 1, ya_n, den, 0)
            return
        tl = _t_left(fr, a)
        if tl < _t_right(fr, a) and ya_n > tl * den:
            _set_frac(out, a, 1, ya_n, den, 0)
            return
        xcur = a
        ycur_n = ya_n


# -- anchored scans ------------------------------------------------------------

cdef enum:
    KIND_BOTTOM = 0
    KIND_TOP = 1
    KIND_CORNER = 2


cdef struct Event:
    i64 gn          # gradient numerator  (y - ay)
    i64 gd          # gradient denominator (x - ax) > 0, doubles as dx
    i64 x
    i64 y
    int kind
    int slot        # lower-chain slot for KIND_BOTTOM, else -1


cdef int _cmp_event(const void *pa, const void *pb) noexcept nogil:
    cdef const Event *a = <const Event *> pa
    cdef const Event *b = <const Event *> pb
    cdef i128 cross = (<i128> a.gn) * b.gd - (<i128> b.gn) * a.gd
    if cross < 0:
        return -1
    if cross > 0:
        return 1
    if a.gd != b.gd:
        return -1 if a.gd < b.gd else 1
    return 0


cdef struct Scan:
    Event *events
    i64 *bot_xs     # ascending x of in-range lower-chain vertices
    unsigned char *done
    int ne
    int nbots
    int head
    i64 min_top     # smallest blocking upper-chain x seen so far
    int has_top     # 0 until a blocker exists


cdef int _scan_init(Frame *fr, i64 ax, i64 ay, Scan *sc) except -1:
    """Build the sorted event list for one anchor.

    An anchor whose immediate up-right window is outside the region —
    floor jumping above it at its own x, or the ceiling at or below it
    — sees nothing, since every ascending ray leaves instantly.
    """
    sc.events = NULL
    sc.bot_xs = NULL
    sc.done = NULL
    sc.ne = 0
    sc.nbots = 0
    sc.head = 0
    sc.has_top = 0
    sc.min_top = 0
    if ax >= fr.x_max or ay < _b_right(fr, ax) or ay >= _t_right(fr, ax):
        return 0
    cdef int cap = fr.nbr + fr.ntr + 1, k, ne = 0, nbots = 0
    cdef Event *ev
    sc.events = <Event *> malloc(cap * (sizeof(Event) + sizeof(i64) + 1))
    if sc.events == NULL:
        raise MemoryError()
    sc.bot_xs = <i64 *> (sc.events + cap)
    sc.done = <unsigned char *> (sc.bot_xs + cap)
    cdef i64 x, y
    for k in range(fr.nbr):
        x = fr.brx[k]
        y = fr.bry[k]
        if x > ax and y > ay:
            ev = &sc.events[ne]
            ev.gn = y - ay
            ev.gd = x - ax
            ev.x = x
            ev.y = y
            ev.kind = KIND_BOTTOM
            ev.slot = nbots
            sc.bot_xs[nbots] = x
            sc.done[nbots] = 0
            nbots += 1
            ne += 1
    for k in range(fr.ntr):
        x = fr.trx[k]
        y = fr.try_[k]
        if x <= ax:
            continue
        if y <= ay:
            if not sc.has_top or x < sc.min_top:
                sc.has_top = 1
                sc.min_top = x
        else:
            ev = &sc.events[ne]
            ev.gn = y - ay
            ev.gd = x - ax
            ev.x = x
            ev.y = y
            ev.kind = KIND_TOP
            ev.slot = -1
            ne += 1
    if fr.has_corner and fr.cx > ax and fr.cy > ay:
        ev = &sc.events[ne]
        ev.gn = fr.cy - ay
        ev.gd = fr.cx - ax
        ev.x = fr.cx
        ev.y = fr.cy
        ev.kind = KIND_CORNER
        ev.slot = -1
        ne += 1
    sc.ne = ne
    sc.nbots = nbots
    qsort(sc.events, ne, sizeof(Event), _cmp_event)
    return 0


cdef inline void _scan_free(Scan *sc) noexcept nogil:
    if sc.events != NULL:
        free(sc.events)
        sc.events = NULL


cdef inline int _visible(Scan *sc, i64 x) noexcept nogil:
    """True when no unprocessed lower-chain vertex and no passed
    upper-chain vertex lies at or left of x."""
    while sc.head < sc.nbots and sc.done[sc.head]:
        sc.head += 1
    if sc.head < sc.nbots and sc.bot_xs[sc.head] <= x:
        return 0
    if sc.has_top and sc.min_top <= x:
        return 0
    return 1


cdef inline void _note_top(Scan *sc, i64 x) noexcept nogil:
    if not sc.has_top or x < sc.min_top:
        sc.has_top = 1
        sc.min_top = x


cdef tuple _quad(Exit *n, Exit *f):
    return (n.xn, n.xd, n.yn, n.yd, f.xn, f.xd, f.yn, f.yd)


cdef int _anchor_edge(Frame *fr, i64 ax, i64 ay, Exit *near,
                      Exit *far) except -1:
    """The unique feasible visibility edge through a lower-chain
    anchor: 1 when found (near/far filled), 0 when none.

    The edge must pass through a visible upper-chain vertex and leave
    through a vertical edge (or exactly the far corner); an exit
    through a horizontal edge kills the anchor, and a visible far
    corner leaves the edge to the corner scans instead.
    """
    cdef Scan sc
    cdef Event *e
    cdef int k
    _scan_init(fr, ax, ay, &sc)
    try:
        for k in range(sc.ne):
            e = &sc.events[k]
            if e.kind == KIND_BOTTOM:
                sc.done[e.slot] = 1
                continue
            if not _visible(&sc, e.x):
                if e.kind == KIND_TOP:
                    _note_top(&sc, e.x)
                continue
            if e.kind == KIND_CORNER:
                return 0
            _exit_forward(fr, e.x, e.y, e.gn, e.gd, far)
            if far.kind == 1:
                return 0
            _exit_backward(fr, ax, ay, e.gn, e.gd, near)
            return 1
        return 0
    finally:
        _scan_free(&sc)


def all_anchor_edges(list bx, list bv, list tx, list tv,
                     cx, cy, has_corner):
    """Feasible visibility edges anchored at each lower-chain reflex
    vertex, as numerator/denominator quads."""
    cdef Frame fr
    cdef Exit near, far
    cdef int k
    cdef list out = []
    fr.bx = NULL
    _frame_init(&fr, bx, bv, tx, tv, cx, cy, has_corner)
    try:
        for k in range(fr.nbr):
            if _anchor_edge(&fr, fr.brx[k], fr.bry[k], &near, &far):
                out.append(_quad(&near, &far))
        return out
    finally:
        _frame_free(&fr)


def anchor_edge(list bx, list bv, list tx, list tv,
                cx, cy, has_corner, ax, ay):
    """The unique feasible visibility edge through one lower-chain
    anchor, or None."""
    cdef Frame fr
    cdef Exit near, far
    cdef i64 cax = ax, cay = ay
    fr.bx = NULL
    _frame_init(&fr, bx, bv, tx, tv, cx, cy, has_corner)
    try:
        if _anchor_edge(&fr, cax, cay, &near, &far):
            return _quad(&near, &far)
        return None
    finally:
        _frame_free(&fr)


def aux_edge(list bx, list bv, list tx, list tv,
             cx, cy, has_corner, ax, ay):
    """Like :func:`anchor_edge` but pinned at the anchor (no backward
    extension) and accepting the far corner as a terminal; used for
    frontier-endpoint auxiliary edges."""
    cdef Frame fr
    cdef Scan sc
    cdef Exit near, far
    cdef Event *e
    cdef int k
    cdef i64 cax = ax, cay = ay
    cdef object result = None
    fr.bx = NULL
    sc.events = NULL
    _frame_init(&fr, bx, bv, tx, tv, cx, cy, has_corner)
    try:
        _scan_init(&fr, cax, cay, &sc)
        near.xn = cax
        near.xd = 1
        near.yn = cay
        near.yd = 1
        for k in range(sc.ne):
            e = &sc.events[k]
            if e.kind == KIND_BOTTOM:
                sc.done[e.slot] = 1
                continue
            if not _visible(&sc, e.x):
                if e.kind == KIND_TOP:
                    _note_top(&sc, e.x)
                continue
            if e.kind == KIND_CORNER:
                far.xn = e.x
                far.xd = 1
                far.yn = e.y
                far.yd = 1
                return _quad(&near, &far)
            _exit_forward(&fr, e.x, e.y, e.gn, e.gd, &far)
            if far.kind == 1:
                return None
            return _quad(&near, &far)
        return result
    finally:
        _scan_free(&sc)
        _frame_free(&fr)


def corner_edges(list bx, list bv, list tx, list tv,
                 cx, cy, has_corner, ax, ay):
    """Maximal edges from a boundary anchor through every visible
    vertex (both chains), each pinned at the anchor and extended to
    its first exit; any exit kind qualifies."""
    cdef Frame fr
    cdef Scan sc
    cdef Exit near, far
    cdef Event *e
    cdef int k
    cdef i64 cax = ax, cay = ay
    cdef list out = []
    fr.bx = NULL
    sc.events = NULL
    _frame_init(&fr, bx, bv, tx, tv, cx, cy, has_corner)
    try:
        _scan_init(&fr, cax, cay, &sc)
        near.xn = cax
        near.xd = 1
        near.yn = cay
        near.yd = 1
        for k in range(sc.ne):
            e = &sc.events[k]
            if e.kind == KIND_BOTTOM:
                sc.done[e.slot] = 1
                if _visible(&sc, e.x):
                    _exit_forward(&fr, e.x, e.y, e.gn, e.gd, &far)
                    out.append(_quad(&near, &far))
                continue
            if _visible(&sc, e.x):
                if e.kind == KIND_CORNER:
                    far.xn = e.x
                    far.xd = 1
                    far.yn = e.y
                    far.yd = 1
                    out.append(_quad(&near, &far))
                else:
                    _exit_forward(&fr, e.x, e.y, e.gn, e.gd, &far)
                    out.append(_quad(&near, &far))
            if e.kind == KIND_TOP:
                _note_top(&sc, e.x)
        return out
    finally:
        _scan_free(&sc)
        _frame_free(&fr)
