"""Command-line interface.

Subcommands: ``classify``, ``skeleton``, ``generate``, ``verify``,
``blocked``, ``bench``.  Exit codes: 0 success, 1 validation or
verification failure, 2 usage error.  Errors are written to standard
error with a machine-readable ``E:<code>:`` prefix.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .formats import (
    FormatError,
    read_obstacle,
    read_skeleton,
    serialize_obstacle,
    serialize_skeleton,
    write_obstacle,
    write_skeleton,
)
from .generator import GeneratorError, GeneratorParams, random_obstacle
from .geom import Point
from .obstacle import ObstacleInvalid, ObstacleKind, classify
from .oracle import probe_skeleton
from .rng import derive_seed
from .skeleton import (
    SkeletonError,
    compute_skeleton,
    obstacle_separates,
    path_blocked,
    validate_skeleton,
)
from .svgout import write_svg

__all__ = ["main"]

# Fixed numbering so bench seeds do not depend on flag order.
_BENCH_KIND_NO = {"l": 1, "t": 2, "staircase": 3, "partial": 4,
                  "general": 5}
# Smallest feasible even vertex count per kind; requested sizes below
# the floor are bumped to it (the `n` column reports the actual count).
_BENCH_MIN_N = {"l": 6, "t": 8, "staircase": 8, "partial": 10,
                "general": 12}

_CSV_COLUMNS = ("kind", "n", "seeds", "weak_min", "weak_med", "weak_max",
                "conn_min", "conn_med", "conn_max")


class _CliError(Exception):
    def __init__(self, code: str, message: str, exit_code: int = 1):
        super().__init__(message)
        self.code = code
        self.exit_code = exit_code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise _CliError("usage", message, exit_code=2)


def _fail(code: str, message: str, exit_code: int = 1) -> "NoReturn":
    raise _CliError(code, message, exit_code=exit_code)


def _load_obstacle(path: str):
    try:
        return read_obstacle(path)
    except OSError as exc:
        _fail("io", f"cannot read obstacle '{path}': {exc.strerror}")
    except FormatError as exc:
        _fail("format", f"{path}: {exc}")


def _load_skeleton(path: str):
    try:
        return read_skeleton(path)
    except OSError as exc:
        _fail("io", f"cannot read skeleton '{path}': {exc.strerror}")
    except FormatError as exc:
        _fail("format", f"{path}: {exc}")


def _parse_point(text: str, flag: str) -> Point:
    parts = text.split(",")
    if len(parts) != 2:
        _fail("usage", f"{flag} expects 'x,y', got '{text}'", exit_code=2)
    try:
        return Point(Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError):
        _fail("usage", f"{flag}: '{text}' is not a rational point",
              exit_code=2)


def _kind_name(ob) -> str:
    info = classify(ob)
    name = info.kind.value
    if info.kind is ObstacleKind.GENERAL and info.subtype is not None:
        name += f"/{info.subtype.value}"
    return name


# -- subcommand handlers -------------------------------------------------------


def _cmd_classify(args) -> int:
    ob = _load_obstacle(args.obstacle)
    corners = ",".join(ob.extreme_corners) if ob.extreme_corners else "-"
    print(f"{_kind_name(ob)} vertices={ob.n} "
          f"box={ob.box.width}x{ob.box.height} corners={corners}")
    return 0


def _cmd_skeleton(args) -> int:
    ob = _load_obstacle(args.obstacle)
    mode = "connected" if args.connected else "weak"
    try:
        sk = compute_skeleton(ob, mode=mode)
    except SkeletonError as exc:
        _fail("skeleton", str(exc))
    ok, reasons = validate_skeleton(ob, sk.edges)
    if not ok:
        _fail("verify", "constructed skeleton failed validation: "
              + "; ".join(reasons))
    text = serialize_skeleton(sk.edges)
    if args.out:
        try:
            write_skeleton(args.out, sk.edges)
        except OSError as exc:
            _fail("io", f"cannot write '{args.out}': {exc.strerror}")
    else:
        sys.stdout.write(text)
    if args.svg:
        try:
            write_svg(args.svg, ob, sk.edges)
        except OSError as exc:
            _fail("io", f"cannot write '{args.svg}': {exc.strerror}")
    return 0


def _cmd_generate(args) -> int:
    width = args.width if args.width is not None else 3 * args.vertices // 4
    height = (args.height if args.height is not None
              else 3 * args.vertices // 4)
    try:
        params = GeneratorParams(kind=args.kind, vertex_count=args.vertices,
                                 width=width, height=height, seed=args.seed,
                                 length_law=args.length_law)
        ob = random_obstacle(params)
    except (GeneratorError, ValueError) as exc:
        _fail("infeasible", str(exc))
    if args.out:
        try:
            write_obstacle(args.out, ob)
        except OSError as exc:
            _fail("io", f"cannot write '{args.out}': {exc.strerror}")
    else:
        sys.stdout.write(serialize_obstacle(ob))
    return 0


def _cmd_verify(args) -> int:
    ob = _load_obstacle(args.obstacle)
    edges = _load_skeleton(args.skeleton)
    ok, reasons = validate_skeleton(ob, edges)
    if not ok:
        _fail("verify", "; ".join(reasons))
    if args.probe:
        cex = probe_skeleton(ob, edges, seed=args.seed,
                             attempts=args.probe)
        if cex is not None:
            p, q = cex
            print(f"counterexample p={p} q={q}")
            _fail("verify", "probe found a separated pair the skeleton "
                  "does not block")
    print(f"ok edges={len(edges)}")
    return 0


def _cmd_blocked(args) -> int:
    ob = _load_obstacle(args.obstacle)
    edges = _load_skeleton(args.skeleton)
    p = _parse_point(args.p, "--p")
    q = _parse_point(args.q, "--q")
    sep = obstacle_separates(ob, p, q)
    blk = path_blocked(edges, p, q)
    proxy = blk or not sep
    print(f"separates={str(sep).lower()} blocked={str(blk).lower()} "
          f"proxy_ok={str(proxy).lower()}")
    return 0


def _bench_cell(kind: str, n: int, seeds: int, seed_base: int):
    """Skeleton sizes for one (kind, size) cell; one RNG stream per
    seed index, independent of the flag order."""
    box = 3 * n // 4
    kind_no = _BENCH_KIND_NO[kind]

    def one(k: int) -> tuple[int, int]:
        seed = derive_seed(seed_base, (kind_no * 1_000_003 + n) * 1_000_003
                           + k)
        ob = random_obstacle(GeneratorParams(
            kind=kind, vertex_count=n, width=box, height=box, seed=seed))
        weak = len(compute_skeleton(ob, mode="weak").edges)
        conn = len(compute_skeleton(ob, mode="connected").edges)
        return weak, conn

    env = os.environ.get("RECTISKEL_THREADS")
    workers = max(1, int(env)) if env else min(8, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(one, range(seeds)))
    weak = sorted(w for w, _ in results)
    conn = sorted(c for _, c in results)
    lower_med = (seeds - 1) // 2
    return {
        "kind": kind, "n": n, "seeds": seeds,
        "weak_min": weak[0], "weak_med": weak[lower_med],
        "weak_max": weak[-1],
        "conn_min": conn[0], "conn_med": conn[lower_med],
        "conn_max": conn[-1],
    }


def _cmd_bench(args) -> int:
    kinds = [k.strip().lower() for k in args.kinds.split(",") if k.strip()]
    for k in kinds:
        if k not in _BENCH_KIND_NO:
            _fail("usage", f"unknown kind '{k}'", exit_code=2)
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        _fail("usage", f"--sizes expects integers, got '{args.sizes}'",
              exit_code=2)
    if not kinds or not sizes:
        _fail("usage", "--kinds and --sizes must be nonempty", exit_code=2)
    rows = []
    for kind in kinds:
        for n in sizes:
            actual = max(n + (n % 2), _BENCH_MIN_N[kind])
            try:
                rows.append(_bench_cell(kind, actual, args.seeds,
                                        args.seed_base))
            except GeneratorError as exc:
                _fail("infeasible", f"{kind} n={actual}: {exc}")
    out = open(args.csv, "w", newline="", encoding="ascii") \
        if args.csv else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=_CSV_COLUMNS,
                                lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.csv:
            out.close()
    return 0


# -- parser wiring -------------------------------------------------------------


def _build_parser() -> _Parser:
    top = _Parser(prog="rectiskel",
                  description="Minimum skeletons for rectilinearly-convex "
                              "obstacles.")
    top.add_argument("--version", action="version",
                     version=f"%(prog)s {__version__}")
    sub = top.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("classify", help="classify an obstacle file")
    p.add_argument("obstacle")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("skeleton", help="compute a minimum skeleton")
    p.add_argument("obstacle")
    p.add_argument("--connected", action="store_true",
                   help="require a connected skeleton")
    p.add_argument("--out", help="write the skeleton to this file "
                                 "instead of standard output")
    p.add_argument("--svg", help="also render obstacle and skeleton "
                                 "to this SVG file")
    p.set_defaults(func=_cmd_skeleton)

    p = sub.add_parser("generate", help="generate a random obstacle")
    p.add_argument("--kind", required=True,
                   choices=sorted(_BENCH_KIND_NO),
                   help="obstacle kind")
    p.add_argument("--vertices", required=True, type=int,
                   help="even vertex count")
    p.add_argument("--width", type=int, help="bounding-box width "
                   "(default: 3*vertices/4)")
    p.add_argument("--height", type=int, help="bounding-box height "
                   "(default: 3*vertices/4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length-law", choices=("uniform", "exponential"),
                   default="uniform")
    p.add_argument("--out", help="write the obstacle to this file "
                                 "instead of standard output")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="validate a skeleton against an "
                                      "obstacle")
    p.add_argument("obstacle")
    p.add_argument("skeleton")
    p.add_argument("--probe", type=int, default=0, metavar="N",
                   help="additionally test N random outside pairs")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("blocked", help="test one point pair against a "
                                       "skeleton")
    p.add_argument("obstacle")
    p.add_argument("skeleton")
    p.add_argument("--p", required=True, metavar="x,y")
    p.add_argument("--q", required=True, metavar="x,y")
    p.set_defaults(func=_cmd_blocked)

    p = sub.add_parser("bench", help="edge-count statistics over random "
                                     "obstacles")
    p.add_argument("--kinds", required=True,
                   help="comma-separated kinds")
    p.add_argument("--sizes", required=True,
                   help="comma-separated vertex counts")
    p.add_argument("--seeds", required=True, type=int,
                   help="seeds per (kind, size) cell")
    p.add_argument("--csv", help="write rows to this file instead of "
                                 "standard output")
    p.add_argument("--seed-base", type=int, default=0, dest="seed_base")
    p.set_defaults(func=_cmd_bench)
    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            parser.print_usage(sys.stderr)
            return 2
        return args.func(args)
    except _CliError as exc:
        print(f"E:{exc.code}:{exc}", file=sys.stderr)
        return exc.exit_code
    except ObstacleInvalid as exc:
        print(f"E:invalid:{exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
