"""Recognition and counting of z-rectangles.

A z-rectangle is a quadruple of points (top, left, bottom, right) whose
keys appear in relative order 3,1,4,2 over time and whose spanned
axis-aligned box contains no other point of the set.  Counting them
requires distinct x- and y-coordinates; on degenerate inputs the count
is meaningless, so such inputs are refused.
"""

from __future__ import annotations

from itertools import permutations
from typing import NamedTuple

from .geometry import Point, PointSet, require_distinct_xy


class ZRect(NamedTuple):
    top: Point
    left: Point
    bottom: Point
    right: Point


class ZRectResult(NamedTuple):
    count: int
    witnesses: list[ZRect]


def is_zrect(P: PointSet, p: Point, q: Point, r: Point, s: Point) -> bool:
    """Check the three z-rectangle conditions for roles (top p, left q,
    bottom r, right s)."""
    require_distinct_xy(P, "is_zrect")
    for pt in (p, q, r, s):
        if pt not in P:
            raise ValueError(f"is_zrect: {pt} not in the point set")
    if not (q[0] < p[0] < r[0] < s[0]):
        return False
    if not (r[1] < q[1] < s[1] < p[1]):
        return False
    inside = sum(
        1 for x, y in P if q[0] <= x <= s[0] and r[1] <= y <= p[1]
    )
    return inside == 4


def zrects(P: PointSet) -> ZRectResult:
    """Count all z-rectangles and return them, canonically sorted.

    For a candidate (top, bottom) pair the other two roles are forced:
    the left point must be the rightmost point left of the top within
    the open y-band, and the right point the leftmost point right of
    the bottom — any other choice leaves a point inside the box.  Each
    forced quadruple is then checked against the full definition.
    """
    require_distinct_xy(P, "zrects")
    pts = P.by_y
    m = len(pts)
    found: list[ZRect] = []
    for ti in range(m):  # top point
        px, py = pts[ti]
        for tr in range(ti):  # bottom point, strictly earlier in time
            rx, ry = pts[tr]
            if rx <= px:
                continue
            qx = qy = sx = sy = None
            for tb in range(tr + 1, ti):
                bx, by = pts[tb]
                if bx < px and (qx is None or bx > qx):
                    qx, qy = bx, by
                if bx > rx and (sx is None or bx < sx):
                    sx, sy = bx, by
            if qx is None or sx is None:
                continue
            # Forced roles; verify ordering and box emptiness.
            if not (qx < px < rx < sx):
                continue
            if not (ry < qy < sy < py):
                continue
            band_hits = 0
            for tb in range(tr + 1, ti):
                bx, _ = pts[tb]
                if qx <= bx <= sx:
                    band_hits += 1
            if band_hits == 2:  # exactly the forced left and right points
                found.append(ZRect((px, py), (qx, qy), (rx, ry), (sx, sy)))
    found.sort()
    return ZRectResult(len(found), found)


def zrects_brute(P: PointSet, max_points: int = 12) -> int:
    """Oracle count: test every ordered quadruple with a containment scan."""
    require_distinct_xy(P, "zrects_brute")
    if len(P) > max_points:
        raise ValueError(
            f"zrects_brute: {len(P)} points exceeds the cap of {max_points}"
        )
    pts = list(P)
    count = 0
    for p, q, r, s in permutations(pts, 4):
        if not (q[0] < p[0] < r[0] < s[0]):
            continue
        if not (r[1] < q[1] < s[1] < p[1]):
            continue
        inside = sum(
            1 for x, y in pts if q[0] <= x <= s[0] and r[1] <= y <= p[1]
        )
        if inside == 4:
            count += 1
    return count
