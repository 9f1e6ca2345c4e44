"""Bottom-up sweep that materializes empty-rectangle corners, and the
charging classification of the points it adds.

Sweeping the accesses by increasing y, each access p contributes, for
every point q of the current set (earlier accesses plus previously added
points) lying strictly lower-left of p with an empty rectangle between
them, the upper-left corner (q.x, p.y).  The count of added points is
the upward half of the independent-rectangle lower bound; the downward
half mirrors it with lower-right partners and upper-right corners.

Corners created while handling one access only enter the set after all
of that access's partners have been gathered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .geometry import Point, PointSet, hflip, require_distinct_xy
from .zrect import zrects


@dataclass(frozen=True)
class AddedPoint:
    x: int
    y: int
    source: Point  # the access whose sweep step created this corner

    @property
    def point(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class SweepOutput:
    accesses: PointSet
    added: tuple[AddedPoint, ...]
    direction: str  # "up" | "down"

    @property
    def added_points(self) -> frozenset[Point]:
        return frozenset(a.point for a in self.added)


def _sweep_up(points: list[Point]) -> list[AddedPoint]:
    """Core up-sweep on accesses sorted by ascending y."""
    current: list[Point] = []  # grows in nondecreasing y
    added: list[AddedPoint] = []
    seen: set[Point] = set()
    for px, py in points:
        partners: list[Point] = []
        hi: int | None = None
        i = len(current) - 1
        while i >= 0:
            gy = current[i][1]
            gbest: int | None = None
            while i >= 0 and current[i][1] == gy:
                qx = current[i][0]
                if qx < px and (gbest is None or qx > gbest):
                    gbest = qx
                i -= 1
            if gbest is not None and (hi is None or gbest > hi):
                partners.append((gbest, gy))
                hi = gbest
                if hi == px - 1:
                    break  # no key fits strictly between any more
        step: list[AddedPoint] = []
        for qx, qy in partners:
            corner = (qx, py)
            if corner not in seen:
                seen.add(corner)
                step.append(AddedPoint(qx, py, (px, py)))
        added.extend(step)
        current.append((px, py))
        current.extend(a.point for a in step)
    return added


def sweep_add_up(P: PointSet) -> SweepOutput:
    require_distinct_xy(P, "sweep_add_up")
    return SweepOutput(P, tuple(_sweep_up(P.by_y)), "up")


def sweep_add_down(P: PointSet) -> SweepOutput:
    """Mirror sweep: partners to the lower right, upper-right corners.

    Runs the up-sweep on the horizontally flipped set and flips the
    results back.
    """
    require_distinct_xy(P, "sweep_add_down")
    flipped = _sweep_up(hflip(P).by_y)
    added = tuple(
        AddedPoint(-a.x, a.y, (-a.source[0], a.source[1])) for a in flipped
    )
    return SweepOutput(P, added, "down")


def irb_up(P: PointSet) -> int:
    return len(sweep_add_up(P).added)


def irb_down(P: PointSet) -> int:
    return len(sweep_add_down(P).added)


@dataclass(frozen=True)
class AddedPointType:
    """Charging class of one added point; at least one flag must hold."""

    point: Point
    rightmost_in_row: bool  # type a: rightmost added point at its y
    highest_in_column: bool  # type b: highest added point at its x
    zrect_top: Optional[Point] = None  # type c: charged z-rectangle top

    @property
    def labels(self) -> str:
        out = ""
        if self.rightmost_in_row:
            out += "a"
        if self.highest_in_column:
            out += "b"
        if self.zrect_top is not None:
            out += "c"
        return out


class ClassificationError(RuntimeError):
    """An added point fits none of the three charging types; this
    signals an implementation bug, not bad input."""


def classify_added(P: PointSet, out: SweepOutput) -> list[AddedPointType]:
    """Type every added point of an up-sweep.

    A point is type (a) if it is the rightmost added point in its row
    and type (b) if it is the highest added point in its column.  A
    point that is neither must be type (c): the lowest added point
    above it in its column shares its y with an access that tops some
    z-rectangle; that access is recorded as the witness.
    """
    if out.direction != "up":
        raise ValueError("classify_added: requires an up-sweep output")
    if out.accesses != P:
        raise ValueError("classify_added: sweep output does not belong to P")
    pts = [a.point for a in out.added]
    max_x_at_y: dict[int, int] = {}
    max_y_at_x: dict[int, int] = {}
    for x, y in pts:
        max_x_at_y[y] = max(max_x_at_y.get(y, x), x)
        max_y_at_x[x] = max(max_y_at_x.get(x, y), y)
    access_by_y = {y: (x, y) for x, y in P}
    tops: set[Point] | None = None  # computed lazily, only when needed

    result: list[AddedPointType] = []
    for x, y in pts:
        is_a = max_x_at_y[y] == x
        is_b = max_y_at_x[x] == y
        witness: Point | None = None
        if not is_a and not is_b:
            above = [ay for ax, ay in pts if ax == x and ay > y]
            r_y = min(above)  # nonempty: the point is not highest in column
            d = access_by_y.get(r_y)
            if tops is None:
                tops = {w.top for w in zrects(P).witnesses}
            if d is None or d not in tops:
                raise ClassificationError(
                    f"added point ({x}, {y}) fits no charging type"
                )
            witness = d
        result.append(AddedPointType((x, y), is_a, is_b, witness))
    return result


def serialize_sweep(
    out: SweepOutput, types: Optional[list[AddedPointType]] = None
) -> str:
    """Text form: `A <x> <y>` per access and `+ <x> <y> [<types>]` per
    added point, ascending y then x."""
    by_point = {t.point: t.labels for t in types} if types else {}
    lines = [("A", x, y, "") for x, y in out.accesses] + [
        ("+", a.x, a.y, by_point.get(a.point, "")) for a in out.added
    ]
    lines.sort(key=lambda rec: (rec[2], rec[1]))
    return "".join(
        f"{tag} {x} {y} {lbl}".rstrip() + "\n" for tag, x, y, lbl in lines
    )
