"""rectiskel: provably minimum skeletons for rectilinearly-convex obstacles.

A skeleton of an obstacle is a small set of interior segments that can
stand in for the obstacle in intersection tests: whenever two outside
points cannot be joined by an axis-parallel route with at most one bend
without cutting the obstacle's interior, every such route between them
touches a skeleton segment.  This package computes minimum-cardinality
skeletons (optionally connected), validates them, cross-checks them
against brute-force and randomized oracles, generates random obstacles,
and ships a CLI plus an experiment harness.
"""

from .geom import Box, Point, Segment, bbox, segments_intersect
from .obstacle import (
    GeneralSubtype,
    Obstacle,
    ObstacleClass,
    ObstacleInvalid,
    ObstacleKind,
    Transform,
    canonicalize,
    classify,
    validate_obstacle,
)
from .skeleton import (
    Skeleton,
    SkeletonError,
    compute_skeleton,
    obstacle_separates,
    path_blocked,
    validate_skeleton,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "Point",
    "Segment",
    "bbox",
    "segments_intersect",
    "Obstacle",
    "ObstacleClass",
    "ObstacleInvalid",
    "ObstacleKind",
    "GeneralSubtype",
    "Transform",
    "canonicalize",
    "classify",
    "validate_obstacle",
    "Skeleton",
    "SkeletonError",
    "compute_skeleton",
    "obstacle_separates",
    "path_blocked",
    "validate_skeleton",
    "__version__",
]
