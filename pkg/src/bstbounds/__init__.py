"""Combinatorial lower bounds on binary-search-tree cost for access traces."""

from .alternation import (
    AltWitness,
    Tree,
    alt_bound,
    alt_brute,
    alt_opt,
    balanced_tree,
    enumerate_trees,
    format_tree,
    parse_tree,
    random_tree,
    tree_leaves,
)
from .funnel import FunnelView, f_value, funnel_bound, funnel_bound_fast, funnel_of
from .generators import (
    SeparationParams,
    bit_reversal,
    random_permutation,
    sep_block,
    separation_sequence,
)
from .geometry import (
    ParseError,
    Point,
    PointSet,
    from_trace,
    hflip,
    parse_pointset,
    parse_trace,
    rotate90,
    serialize_pointset,
    serialize_trace,
    time_reverse,
)
from .mixing import blocks, mix, mix_value
from .sweep import (
    AddedPoint,
    AddedPointType,
    ClassificationError,
    SweepOutput,
    classify_added,
    irb_down,
    irb_up,
    serialize_sweep,
    sweep_add_down,
    sweep_add_up,
)
from .verify import CheckResult, VerifyReport, run_checks
from .zrect import ZRect, ZRectResult, is_zrect, zrects, zrects_brute

__all__ = [
    "AddedPoint",
    "AddedPointType",
    "AltWitness",
    "CheckResult",
    "ClassificationError",
    "FunnelView",
    "ParseError",
    "Point",
    "PointSet",
    "SeparationParams",
    "SweepOutput",
    "Tree",
    "VerifyReport",
    "ZRect",
    "ZRectResult",
    "alt_bound",
    "alt_brute",
    "alt_opt",
    "balanced_tree",
    "bit_reversal",
    "blocks",
    "classify_added",
    "enumerate_trees",
    "f_value",
    "format_tree",
    "from_trace",
    "funnel_bound",
    "funnel_bound_fast",
    "funnel_of",
    "hflip",
    "irb_down",
    "irb_up",
    "is_zrect",
    "mix",
    "mix_value",
    "parse_pointset",
    "parse_trace",
    "parse_tree",
    "random_permutation",
    "random_tree",
    "rotate90",
    "sep_block",
    "separation_sequence",
    "serialize_pointset",
    "serialize_sweep",
    "serialize_trace",
    "sweep_add_down",
    "sweep_add_up",
    "time_reverse",
    "tree_leaves",
    "zrects",
    "zrects_brute",
]
