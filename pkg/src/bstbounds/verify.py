"""Exact cross-checks between the bounds on a concrete input.

Every check below is an exact inequality or invariance (no asymptotic
slack): the two-sided domination of the alternation value, the two
sandwich inequalities between the funnel value and the z-rectangle
count, the reversal gap with explicit constant 3m, rotation and flip
invariances, the sweep-count charge, and totality of the added-point
classification.  Checks that need distinct keys are skipped (with a
notice) when the input has repeated x-coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import alternation, funnel, sweep, zrect
from .geometry import PointSet, hflip, rotate90, time_reverse

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
INFO = "INFO"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, PASS if ok else FAIL, detail if not ok else ""))

    def skip(self, name: str, why: str) -> None:
        self.results.append(CheckResult(name, SKIP, why))

    def info(self, name: str, detail: str) -> None:
        self.results.append(CheckResult(name, INFO, detail))


def run_checks(P: PointSet, level: str = "full", seed: int = 0) -> VerifyReport:
    """Run the suite on one point set; `quick` trims the tree sampling
    and the sweep-based checks."""
    if level not in ("quick", "full"):
        raise ValueError(f"run_checks: unknown level {level!r}")
    report = VerifyReport()
    if not P.has_distinct_y:
        report.add("distinct-y", False, "input has repeated y-coordinates")
        return report

    fb = funnel.funnel_bound(P)
    fb_rev = funnel.funnel_bound(time_reverse(P))
    m = len(P)
    keys = sorted({x for x, _ in P})
    n = len(keys)

    # Two-sided domination: funnel(P) + funnel(rev P) >= alt_T(P) for
    # every reference tree T.
    trees: list[alternation.Tree] = []
    if n >= 1:
        trees.append(alternation.balanced_tree(keys))
    if level == "full" and n >= 2:
        if n <= 7:
            trees = list(alternation.enumerate_trees(keys))
        else:
            rng = random.Random(seed)
            trees += [alternation.random_tree(keys, rng) for _ in range(20)]
    bad = ""
    for tree in trees:
        alt = alternation.alt_bound(P, tree)
        if fb + fb_rev < alt:
            bad = (
                f"funnel {fb} + reverse funnel {fb_rev} < alt {alt} "
                f"for tree {alternation.format_tree(tree)}"
            )
            break
    report.add("two-sided-domination", not bad, bad)

    # Flip invariance holds pointwise, not just in the sum.
    flipped = hflip(P)
    pointwise = all(
        funnel.f_value(P, (x, y)) == funnel.f_value(flipped, (-x, y)) for x, y in P
    )
    report.add(
        "funnel-hflip",
        pointwise and fb == funnel.funnel_bound(flipped),
        f"funnel {fb} vs flipped {funnel.funnel_bound(flipped)}",
    )

    if not P.has_distinct_x:
        skipped = ["funnel-vs-zrects", "zrects-per-point", "reverse-gap-3m", "zrects-rotation"]
        if level == "full":
            skipped += ["irb-charge", "added-classification", "sweep-funnel-remark"]
        for name in skipped:
            report.skip(name, "input has repeated keys")
        return report

    zr = zrect.zrects(P).count
    report.add("funnel-vs-zrects", fb >= 2 * zr, f"funnel {fb} < 2*{zr}")

    per_point = sum(max(0, funnel.f_value(P, p) // 2 - 1) for p in P)
    report.add(
        "zrects-per-point", zr >= per_point, f"zrects {zr} < per-point sum {per_point}"
    )

    report.add(
        "reverse-gap-3m",
        abs(fb - fb_rev) <= 3 * m,
        f"|{fb} - {fb_rev}| > 3*{m}",
    )

    rotated = P
    ok_rot = True
    for _ in range(3):
        rotated = rotate90(rotated)
        if zrect.zrects(rotated).count != zr:
            ok_rot = False
            break
    report.add("zrects-rotation", ok_rot, f"count changed under rotation (was {zr})")

    if level == "full":
        up = sweep.sweep_add_up(P)
        n_up = len(up.added)
        report.add(
            "irb-charge",
            n_up <= 2 * m + m * zr,
            f"irb-up {n_up} > 2*{m} + {m}*{zr}",
        )
        try:
            sweep.classify_added(P, up)
            report.add("added-classification", True)
        except sweep.ClassificationError as exc:
            report.add("added-classification", False, str(exc))
        report.add(
            "sweep-funnel-remark",
            _remark_holds(P, up),
            "an added point's column/row access pair is not funnel-visible",
        )
        report.info("irb-up-down-gap", str(n_up - sweep.irb_down(P)))

    return report


def _remark_holds(P: PointSet, up: sweep.SweepOutput) -> bool:
    # Each added point pairs the access below it in its column with the
    # access in its row; the former must lie in the left funnel of the
    # latter.
    access_by_y = {y: (x, y) for x, y in P}
    for added in up.added:
        below = [
            (x, y) for x, y in P if x == added.x and y < added.y
        ]
        if not below:
            return False
        a = max(below, key=lambda p: p[1])
        b = access_by_y.get(added.y)
        if b is None:
            return False
        if a not in funnel.funnel_of(P, b).left:
            return False
    return True
