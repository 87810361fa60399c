"""Backend dispatch for the sweep engine.

The compiled extension ``_sweep_core`` handles integer-coordinate
frames; everything else (and everything when the extension is missing
or ``RECTISKEL_PURE=1`` is set) runs on the pure-Python reference in
``_sweep_py``.  Both backends implement the same scan semantics; the
test suite cross-checks them edge for edge.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _sweep_py
from ._sweep_py import SweepFrame

_core = None
if os.environ.get("RECTISKEL_PURE") != "1":
    try:
        from . import _sweep_core as _core  # type: ignore[no-redef]
    except ImportError:
        _core = None


def backend_name() -> str:
    return "compiled" if _core is not None else "pure"


# The compiled kernel does exact 64-bit fraction arithmetic; keeping
# coordinates within +/-2**20 bounds every intermediate product well
# inside int64.  Larger inputs take the arbitrary-precision pure path.
_COORD_LIMIT = 1 << 20


def _int_frame(fr: SweepFrame):
    """Frame arrays as plain ints, or None if any value is fractional
    or too large for the fixed-width kernel; memoized on the frame."""
    if fr.ints_cache is not False:
        return fr.ints_cache
    fr.ints_cache = _int_frame_uncached(fr)
    return fr.ints_cache


def _int_frame_uncached(fr: SweepFrame):
    out = []
    for arr in (fr.bx, fr.bv, fr.tx, fr.tv):
        ints = []
        for v in arr:
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    return None
                v = v.numerator
            if not -_COORD_LIMIT <= v <= _COORD_LIMIT:
                return None
            ints.append(int(v))
        out.append(ints)
    if fr.corner is None:
        out.append(-1)
        out.append(-1)
        out.append(0)
    else:
        cx, cy = fr.corner
        if (isinstance(cx, Fraction) and cx.denominator != 1) or \
                (isinstance(cy, Fraction) and cy.denominator != 1):
            return None
        if not (-_COORD_LIMIT <= cx <= _COORD_LIMIT
                and -_COORD_LIMIT <= cy <= _COORD_LIMIT):
            return None
        out.append(int(cx))
        out.append(int(cy))
        out.append(1)
    return out


def _edge_from_quads(q):
    (xn1, xd1, yn1, yd1, xn2, xd2, yn2, yd2) = q
    return ((Fraction(xn1, xd1), Fraction(yn1, yd1)),
            (Fraction(xn2, xd2), Fraction(yn2, yd2)))


def all_anchor_edges(fr: SweepFrame):
    if _core is not None:
        ints = _int_frame(fr)
        if ints is not None:
            return [_edge_from_quads(q) for q in _core.all_anchor_edges(*ints)]
    return _sweep_py.all_anchor_edges(fr)


def _small_int(v) -> bool:
    if isinstance(v, Fraction):
        if v.denominator != 1:
            return False
        v = v.numerator
    return -_COORD_LIMIT <= v <= _COORD_LIMIT


def corner_edges(fr: SweepFrame, ax, ay):
    if _core is not None and _small_int(ax) and _small_int(ay):
        ints = _int_frame(fr)
        if ints is not None:
            return [_edge_from_quads(q)
                    for q in _core.corner_edges(*ints, int(ax), int(ay))]
    return _sweep_py.corner_edges(fr, ax, ay)


def anchor_edge(fr: SweepFrame, ax, ay):
    if _core is not None and _small_int(ax) and _small_int(ay):
        ints = _int_frame(fr)
        if ints is not None:
            q = _core.anchor_edge(*ints, int(ax), int(ay))
            return None if q is None else _edge_from_quads(q)
    return _sweep_py.anchor_edge(fr, ax, ay)


def aux_edge(fr: SweepFrame, ax, ay):
    if _core is not None and _small_int(ax) and _small_int(ay):
        ints = _int_frame(fr)
        if ints is not None:
            q = _core.aux_edge(*ints, int(ax), int(ay))
            return None if q is None else _edge_from_quads(q)
    return _sweep_py.aux_edge(fr, ax, ay)
