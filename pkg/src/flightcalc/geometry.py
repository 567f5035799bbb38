"""Planar polygon tests shared by the envelope and icing chart code.

Polygons are simple (non-self-intersecting) vertex lists, implicitly
closed. Containment uses the winding number with an explicit on-segment
boundary test first, so points on an edge or vertex always classify as
on_boundary regardless of ray direction quirks.
"""

from __future__ import annotations

import math

from .errors import CalcError

Point = tuple[float, float]

# boundary tolerance relative to coordinate magnitude
_EPS = 1e-9


def _cross(ox: float, oy: float, ax: float, ay: float, bx: float, by: float) -> float:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def polygon_bounds(points: list[Point]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def _scale(points: list[Point]) -> float:
    return max(1.0, max(max(abs(x), abs(y)) for x, y in points))


def _segments_properly_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    d1 = _cross(c[0], c[1], d[0], d[1], a[0], a[1])
    d2 = _cross(c[0], c[1], d[0], d[1], b[0], b[1])
    d3 = _cross(a[0], a[1], b[0], b[1], c[0], c[1])
    d4 = _cross(a[0], a[1], b[0], b[1], d[0], d[1])
    if ((d1 > 0 and d2 < 0) or (d1 < 0 and d2 > 0)) and (
        (d3 > 0 and d4 < 0) or (d3 < 0 and d4 > 0)
    ):
        return True
    return False


def validate_polygon(points: list[Point], name: str = "polygon") -> list[Point]:
    """Reject degenerate polygons: <3 vertices, non-finite coordinates,
    repeated consecutive vertices, self-intersection, zero area."""
    if len(points) < 3:
        raise CalcError(f"{name} needs at least 3 vertices, got {len(points)}")
    for x, y in points:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise CalcError(f"{name} has non-finite vertex ({x!r}, {y!r})")
    n = len(points)
    eps = _EPS * _scale(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        if math.hypot(x2 - x1, y2 - y1) <= eps:
            raise CalcError(f"{name} has repeated consecutive vertices at index {i}")
    area2 = 0.0
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        area2 += x1 * y2 - x2 * y1
    if abs(area2) <= eps * eps:
        raise CalcError(f"{name} has zero area")
    for i in range(n):
        a, b = points[i], points[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue  # adjacent edges share a vertex by construction
            c, d = points[j], points[(j + 1) % n]
            if _segments_properly_intersect(a, b, c, d):
                raise CalcError(f"{name} is self-intersecting (edges {i} and {j})")
    return points


def point_segment_distance(px: float, py: float, a: Point, b: Point) -> float:
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    seg2 = dx * dx + dy * dy
    if seg2 == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / seg2
    t = max(0.0, min(1.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def on_boundary(points: list[Point], px: float, py: float, eps: float | None = None) -> bool:
    if eps is None:
        eps = _EPS * _scale(points)
    n = len(points)
    for i in range(n):
        if point_segment_distance(px, py, points[i], points[(i + 1) % n]) <= eps:
            return True
    return False


def classify_point(points: list[Point], px: float, py: float) -> str:
    """'inside', 'outside' or 'on_boundary' by winding number."""
    if on_boundary(points, px, py):
        return "on_boundary"
    wn = 0
    n = len(points)
    for i in range(n):
        x1, y1 = points[i]
        x2, y2 = points[(i + 1) % n]
        if y1 <= py:
            if y2 > py and _cross(x1, y1, x2, y2, px, py) > 0:
                wn += 1
        else:
            if y2 <= py and _cross(x1, y1, x2, y2, px, py) < 0:
                wn -= 1
    return "inside" if wn != 0 else "outside"


def distance_to_boundary(points: list[Point], px: float, py: float) -> float:
    n = len(points)
    return min(
        point_segment_distance(px, py, points[i], points[(i + 1) % n]) for i in range(n)
    )


def signed_margin(points: list[Point], px: float, py: float) -> float:
    """Signed distance to the boundary in bbox-normalised axis units.

    Both axes are scaled by the polygon's bounding box extent first, so
    the margin is comparable between axes with different units. Positive
    inside, negative outside, zero on the boundary.
    """
    minx, miny, maxx, maxy = polygon_bounds(points)
    sx = maxx - minx
    sy = maxy - miny
    norm = [((x - minx) / sx, (y - miny) / sy) for x, y in points]
    nx = (px - minx) / sx
    ny = (py - miny) / sy
    side = classify_point(points, px, py)
    if side == "on_boundary":
        return 0.0
    d = distance_to_boundary(norm, nx, ny)
    return d if side == "inside" else -d
