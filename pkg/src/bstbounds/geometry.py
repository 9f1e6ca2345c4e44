"""Planar point sets, the trace-to-point-set map, and text I/O.

An access trace (x_1, ..., x_m) is viewed geometrically: the i-th access
becomes the point (x_i, i), with keys on the horizontal axis and time on
the vertical axis.  All coordinates are plain Python integers, so the
transforms below (which negate coordinates) are exact.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator, Sequence

Point = tuple[int, int]


class ParseError(ValueError):
    """Malformed trace or point-set text; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class PointSet:
    """Immutable finite set of integer points with set equality.

    Duplicate y-coordinates are representable (rotating a set that has
    repeated x produces them), but every bound computation refuses such
    sets; check ``has_distinct_y`` / ``has_distinct_x`` before use.
    """

    def __init__(self, points: Iterable[Point] = ()):
        self.points = frozenset((int(x), int(y)) for x, y in points)

    @cached_property
    def by_y(self) -> list[Point]:
        """Points ordered by ascending y (chronological order)."""
        return sorted(self.points, key=lambda p: (p[1], p[0]))

    @cached_property
    def has_distinct_y(self) -> bool:
        return len({y for _, y in self.points}) == len(self.points)

    @cached_property
    def has_distinct_x(self) -> bool:
        return len({x for x, _ in self.points}) == len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PointSet):
            return self.points == other.points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({self.by_y!r})"


def require_distinct_y(P: PointSet, op: str) -> None:
    if not P.has_distinct_y:
        raise ValueError(f"{op}: point set must have distinct y-coordinates")


def require_distinct_xy(P: PointSet, op: str) -> None:
    require_distinct_y(P, op)
    if not P.has_distinct_x:
        raise ValueError(f"{op}: point set must have distinct x-coordinates")


def from_trace(keys: Sequence[int]) -> PointSet:
    """Geometric view of a trace: access i of key x becomes point (x, i)."""
    return PointSet((x, i) for i, x in enumerate(keys, start=1))


def time_reverse(P: PointSet) -> PointSet:
    """Flip time: (x, y) -> (x, -y).  Involutive."""
    return PointSet((x, -y) for x, y in P)


def rotate90(P: PointSet) -> PointSet:
    """Counter-clockwise quarter turn: (x, y) -> (-y, x).

    The result has distinct y only if P had distinct x; callers that
    need the distinct-y invariant must check the flag on the result.
    """
    return PointSet((-y, x) for x, y in P)


def hflip(P: PointSet) -> PointSet:
    """Mirror keys: (x, y) -> (-x, y).  Involutive."""
    return PointSet((-x, y) for x, y in P)


def _data_lines(text: str) -> Iterator[tuple[int, str]]:
    # Blank lines and lines starting with '#' are skipped.
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


def parse_trace(text: str) -> list[int]:
    """Parse a trace file: one integer key per line."""
    keys = []
    for lineno, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 1:
            raise ParseError(f"expected one integer, got {line!r}", lineno)
        try:
            keys.append(int(fields[0]))
        except ValueError:
            raise ParseError(f"not an integer: {fields[0]!r}", lineno) from None
    return keys


def parse_pointset(text: str) -> PointSet:
    """Parse a point-set file: one `<x> <y>` pair per line, distinct y."""
    points: list[Point] = []
    seen_y: dict[int, int] = {}
    for lineno, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected `<x> <y>`, got {line!r}", lineno)
        try:
            x, y = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"not an integer pair: {line!r}", lineno) from None
        if y in seen_y:
            raise ParseError(
                f"duplicate y-coordinate {y} (first seen on line {seen_y[y]})", lineno
            )
        seen_y[y] = lineno
        points.append((x, y))
    return PointSet(points)


def serialize_trace(keys: Sequence[int]) -> str:
    return "".join(f"{x}\n" for x in keys)


def serialize_pointset(P: PointSet) -> str:
    """One `<x> <y>` line per point, ascending y for determinism."""
    return "".join(f"{x} {y}\n" for x, y in P.by_y)
