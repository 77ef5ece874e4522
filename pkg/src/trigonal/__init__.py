"""Trigonal diagrams of two-bridge links: classification, slide moves, search."""

from trigonal.contfrac import (
    InvalidFraction,
    SchubertPair,
    eval_word,
    mod_inverse,
    positive_expansion,
    staircase,
)
from trigonal.diagram import (
    LinkClass,
    Word,
    complexity,
    crossing_count,
    format_word,
    is_alternating,
    is_hard,
    link_class,
    mirror_class,
    normal_form,
    parse_word,
    same_link,
    theorem1_applicable,
)
from trigonal.moves import MoveInstance, Rule, apply_move, enumerate_moves, lagrange_apply
from trigonal.search import (
    NotReached,
    SearchBudgetExceeded,
    SearchLimits,
    SimplifyPath,
    closure,
    is_catalog_simple,
    minimize,
    simplify_to_alternating,
)

__all__ = [
    "InvalidFraction",
    "LinkClass",
    "MoveInstance",
    "NotReached",
    "Rule",
    "SchubertPair",
    "SearchBudgetExceeded",
    "SearchLimits",
    "SimplifyPath",
    "Word",
    "apply_move",
    "closure",
    "complexity",
    "crossing_count",
    "enumerate_moves",
    "eval_word",
    "format_word",
    "is_alternating",
    "is_catalog_simple",
    "is_hard",
    "lagrange_apply",
    "link_class",
    "minimize",
    "mirror_class",
    "mod_inverse",
    "normal_form",
    "parse_word",
    "positive_expansion",
    "same_link",
    "simplify_to_alternating",
    "staircase",
    "theorem1_applicable",
]
