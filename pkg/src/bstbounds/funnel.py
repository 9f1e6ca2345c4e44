"""Funnel decomposition of points and the Funnel lower bound.

The funnel of a point p is the set of points below p that span an empty
axis-aligned rectangle with p, split into a left part (smaller x) and a
right part (larger x).  A point's contribution is the number of maximal
runs when its funnel is read in time order and labeled by side; the
bound sums the contributions.

``funnel_bound`` is the normative reference (a per-point scan of the
definition); ``funnel_bound_fast`` replays the trace through a
rotate-to-root tree and counts direction runs on each access path, and
must agree with the reference wherever it accepts the input.
"""

from __future__ import annotations

from typing import NamedTuple

from .geometry import Point, PointSet, require_distinct_y, require_distinct_xy
from .mixing import mix_value


class FunnelView(NamedTuple):
    """Left/right funnel of one point, each ordered by ascending y."""

    left: list[Point]
    right: list[Point]


def funnel_of(P: PointSet, p: Point) -> FunnelView:
    """Exact left and right funnel of p within P.

    One descending-y scan below p suffices: a point enters the left
    funnel exactly when it raises the running maximum x seen on p's left
    (symmetrically with the minimum on the right), and a point sharing
    p's x blocks everything below it on both sides.
    """
    require_distinct_y(P, "funnel_of")
    if p not in P:
        raise ValueError(f"funnel_of: {p} not in the point set")
    px, py = p
    left: list[Point] = []
    right: list[Point] = []
    hi: int | None = None
    lo: int | None = None
    for q in reversed(P.by_y):
        qx, qy = q
        if qy >= py:
            continue
        if qx < px:
            if hi is None or qx > hi:
                hi = qx
                left.append(q)
                if hi >= px - 1 and lo is not None and lo <= px + 1:
                    break
        elif qx > px:
            if lo is None or qx < lo:
                lo = qx
                right.append(q)
                if lo <= px + 1 and hi is not None and hi >= px - 1:
                    break
        else:
            break
    left.reverse()
    right.reverse()
    return FunnelView(left, right)


def f_value(P: PointSet, p: Point) -> int:
    """Side-alternation count of p's funnel in time order."""
    view = funnel_of(P, p)
    return mix_value([y for _, y in view.left], [y for _, y in view.right])


def funnel_bound(P: PointSet) -> int:
    """Sum of per-point funnel alternation counts over all of P."""
    require_distinct_y(P, "funnel_bound")
    xs = [x for x, _ in P.by_y]
    total = 0
    for t in range(len(xs)):
        px = xs[t]
        hi_open = True  # an integer strictly between hi and px still exists
        lo_open = True
        hi = None
        lo = None
        runs = 0
        last = 0
        for u in range(t - 1, -1, -1):
            qx = xs[u]
            if qx < px:
                if hi is None or qx > hi:
                    hi = qx
                    if last != 1:
                        runs += 1
                        last = 1
                    if qx == px - 1:
                        hi_open = False
                        if not lo_open:
                            break
            elif qx > px:
                if lo is None or qx < lo:
                    lo = qx
                    if last != 2:
                        runs += 1
                        last = 2
                    if qx == px + 1:
                        lo_open = False
                        if not hi_open:
                            break
            else:
                break  # same key: blocks both sides outright
        total += runs
    return total


class _Node:
    __slots__ = ("key", "left", "right")

    def __init__(self, key: int):
        self.key = key
        self.left: _Node | None = None
        self.right: _Node | None = None


def funnel_bound_fast(P: PointSet) -> int:
    """Funnel bound via a rotate-to-root tree over the access prefix.

    Replays the accesses in time order; each key is inserted on first
    access, brought to the root by single rotations (done top-down in
    one unzipping pass), and contributes the number of maximal
    same-direction runs on its root-to-key path.  Only validated against
    ``funnel_bound``, never trusted independently.
    """
    require_distinct_xy(P, "funnel_bound_fast")
    root: _Node | None = None
    total = 0
    for x, _ in P.by_y:
        if root is None:
            root = _Node(x)
            continue
        node: _Node | None = root
        l_tail: _Node | None = None
        r_tail: _Node | None = None
        l_root: _Node | None = None
        r_root: _Node | None = None
        runs = 0
        last = ""
        while node is not None:
            if x < node.key:
                if last != "L":
                    runs += 1
                    last = "L"
                if r_tail is None:
                    r_root = node
                else:
                    r_tail.left = node
                r_tail = node
                node = node.left
            else:
                if last != "R":
                    runs += 1
                    last = "R"
                if l_tail is None:
                    l_root = node
                else:
                    l_tail.right = node
                l_tail = node
                node = node.right
        if l_tail is not None:
            l_tail.right = None
        if r_tail is not None:
            r_tail.left = None
        root = _Node(x)
        root.left = l_root
        root.right = r_root
        total += runs
    return total
