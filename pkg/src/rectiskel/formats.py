"""Plain-text file formats for obstacles and skeletons.

Obstacle files (``RCPOLY 1``) hold one integer ``x y`` pair per line in
counterclockwise order, without repeating the first vertex.  Skeleton
files (``RSKEL 1``) hold one ``x1 y1 x2 y2`` edge per line, each
coordinate an exact rational spelled ``p`` or ``p/q`` in lowest terms.
``#`` starts a comment in either format.  Both formats round-trip
exactly.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .geom import Segment
from .obstacle import Obstacle, ObstacleInvalid, validate_obstacle

__all__ = [
    "FormatError",
    "OBSTACLE_MAGIC",
    "SKELETON_MAGIC",
    "parse_obstacle",
    "parse_skeleton",
    "read_obstacle",
    "read_skeleton",
    "serialize_obstacle",
    "serialize_skeleton",
    "write_obstacle",
    "write_skeleton",
]

OBSTACLE_MAGIC = "RCPOLY 1"
SKELETON_MAGIC = "RSKEL 1"

_PathLike = Union[str, "os.PathLike[str]"]


class FormatError(ValueError):
    """Malformed obstacle or skeleton text."""


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (1-based line number, content) with comments and blank
    lines stripped."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _check_magic(lines: Iterator[tuple[int, str]], magic: str) -> None:
    try:
        no, line = next(lines)
    except StopIteration:
        raise FormatError(f"empty file, expected '{magic}' header") from None
    if line != magic:
        raise FormatError(f"line {no}: expected '{magic}', got '{line}'")


def _int_token(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(
            f"line {no}: '{tok}' is not an integer coordinate") from None


def _frac_token(tok: str, no: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise FormatError(
            f"line {no}: '{tok}' is not a rational coordinate") from None


def parse_obstacle(text: str) -> Obstacle:
    """Parse ``RCPOLY 1`` text into a validated obstacle."""
    lines = _data_lines(text)
    _check_magic(lines, OBSTACLE_MAGIC)
    verts: list[tuple[int, int]] = []
    for no, line in lines:
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(
                f"line {no}: expected 'x y', got '{line}'")
        verts.append((_int_token(toks[0], no), _int_token(toks[1], no)))
    if not verts:
        raise FormatError("no vertices after header")
    try:
        return validate_obstacle(verts)
    except ObstacleInvalid as exc:
        raise FormatError(str(exc)) from exc


def serialize_obstacle(ob: Obstacle) -> str:
    """Render an obstacle as ``RCPOLY 1`` text (integer coordinates)."""
    out = [OBSTACLE_MAGIC]
    for v in ob.vertices:
        if v.x.denominator != 1 or v.y.denominator != 1:
            raise FormatError(
                f"vertex {v} is not integral; the obstacle format "
                "stores integer coordinates only")
        out.append(f"{v.x.numerator} {v.y.numerator}")
    return "\n".join(out) + "\n"


def parse_skeleton(text: str) -> tuple[Segment, ...]:
    """Parse ``RSKEL 1`` text into a tuple of edges."""
    lines = _data_lines(text)
    _check_magic(lines, SKELETON_MAGIC)
    edges: list[Segment] = []
    for no, line in lines:
        toks = line.split()
        if len(toks) != 4:
            raise FormatError(
                f"line {no}: expected 'x1 y1 x2 y2', got '{line}'")
        x1, y1, x2, y2 = (_frac_token(t, no) for t in toks)
        if (x1, y1) == (x2, y2):
            raise FormatError(f"line {no}: degenerate edge")
        edges.append(Segment((x1, y1), (x2, y2)))
    return tuple(edges)


def serialize_skeleton(edges: Iterable[Segment]) -> str:
    """Render edges as ``RSKEL 1`` text (exact rationals, lowest
    terms)."""
    out = [SKELETON_MAGIC]
    for s in edges:
        out.append(f"{s.a.x} {s.a.y} {s.b.x} {s.b.y}")
    return "\n".join(out) + "\n"


def read_obstacle(path: _PathLike) -> Obstacle:
    with open(path, "r", encoding="ascii") as fh:
        return parse_obstacle(fh.read())


def write_obstacle(path: _PathLike, ob: Obstacle) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_obstacle(ob))


def read_skeleton(path: _PathLike) -> tuple[Segment, ...]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_skeleton(fh.read())


def write_skeleton(path: _PathLike, edges: Sequence[Segment]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(serialize_skeleton(edges))
