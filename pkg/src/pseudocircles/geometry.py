"""Arrangements read off explicit circles in the plane.

Only used to seed constructions whose combinatorics is easiest to describe
with real circles (the wheel family, small test instances).  Touchings are
never produced geometrically: callers overlap the circles slightly and then
contract the resulting lens with :func:`constructions.contract_digon`.
"""

from __future__ import annotations

import math
from itertools import combinations

from .arrangement import Arrangement, Curves, from_curves, rotation_from_angles
from .errors import DomainError

Circle = tuple[float, float, float]


def circle_points(c1: Circle, c2: Circle, tol: float = 1e-12):
    (x1, y1, r1), (x2, y2, r2) = c1, c2
    dx, dy = x2 - x1, y2 - y1
    d = math.hypot(dx, dy)
    if d <= abs(r1 - r2) + tol or d >= r1 + r2 - tol:
        return None
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    mx, my = x1 + a * dx / d, y1 + a * dy / d
    return [(mx + h * dy / d, my - h * dx / d), (mx - h * dy / d, my + h * dx / d)]


def arrangement_of_circles(circles: list[Circle], min_separation: float = 1e-9) -> Arrangement:
    """Combinatorial map of pairwise crossing circles, each traversed ccw."""
    seqs = [[] for _ in circles]
    rots = {}
    points = []
    for i, j in combinations(range(len(circles)), 2):
        pts = circle_points(circles[i], circles[j])
        if pts is None:
            raise DomainError(f"circles {i} and {j} do not cross in two points")
        for k, p in enumerate(pts):
            key = (i, j, k)
            points.append(p)
            angles = {}
            for c in (i, j):
                cx, cy, _ = circles[c]
                phi = math.degrees(math.atan2(p[1] - cy, p[0] - cx))
                angles[(c, 1)] = phi + 90.0
                angles[(c, -1)] = phi - 90.0
                seqs[c].append((phi % 360.0, key))
            rots[key] = rotation_from_angles(angles)
    for p, q in combinations(points, 2):
        if math.dist(p, q) < min_separation:
            raise DomainError("three circles pass (nearly) through one point")
    return from_curves(Curves([[k for _, k in sorted(s)] for s in seqs], rots))
