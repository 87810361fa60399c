"""Deterministic SVG rendering of obstacles and skeletons.

The output is a pure function of the inputs (no timestamps, no
randomness, fixed formatting), so identical inputs produce
byte-identical files.  The obstacle is drawn as a filled polygon with
its four extreme edges highlighted; skeleton edges are drawn as
contrasting strokes on top.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional, Sequence, Union

from .geom import Point, Segment
from .obstacle import Obstacle

__all__ = ["render_svg", "write_svg"]

_PathLike = Union[str, "os.PathLike[str]"]

_PAD = 20.0
_CONTENT = 760.0

_STYLE = (
    "polygon{fill:#d7dde8;stroke:#2f3b52;stroke-width:1.5;"
    "stroke-linejoin:round}"
    ".x{stroke:#e4572e;stroke-width:4;stroke-linecap:round}"
    ".s{stroke:#0a7d36;stroke-width:2.5;stroke-linecap:round}"
)


def _fmt(v: float) -> str:
    s = "%.6g" % v
    return "0" if s == "-0" else s


def render_svg(ob: Obstacle, edges: Iterable[Segment] = ()) -> str:
    """Render the obstacle and (possibly empty) skeleton as SVG 1.1
    text."""
    lo, hi = ob.box
    w = float(hi.x - lo.x)
    h = float(hi.y - lo.y)
    scale = _CONTENT / max(w, h)

    def pt(p: Point) -> tuple[float, float]:
        return (_PAD + (float(p.x) - float(lo.x)) * scale,
                _PAD + (float(hi.y) - float(p.y)) * scale)

    def xy(p: Point) -> str:
        a, b = pt(p)
        return f"{_fmt(a)},{_fmt(b)}"

    def line(s: Segment, cls: str) -> str:
        (x1, y1), (x2, y2) = pt(s.a), pt(s.b)
        return (f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}"'
                f' x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')

    width = _fmt(2 * _PAD + w * scale)
    height = _fmt(2 * _PAD + h * scale)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        f"<style>{_STYLE}</style>",
        "<polygon points=\"" + " ".join(xy(v) for v in ob.vertices) + "\"/>",
    ]
    for name in ("left", "bottom", "right", "top"):
        out.append(line(ob.extreme[name], "x"))
    for s in edges:
        out.append(line(s, "s"))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(path: _PathLike, ob: Obstacle,
              edges: Iterable[Segment] = ()) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(render_svg(ob, edges))
