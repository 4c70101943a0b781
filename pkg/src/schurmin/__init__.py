"""Monochromatic Schur triples in 2- and r-colorings of [1, n]."""
from .calculus import certify_local_min, closed_partial_F, closed_partial_G, flip_delta
from .coloring import (
    ColoringParseError,
    FamilyParams,
    InvalidParameter,
    RColoring,
    RunLengthSpec,
    complement,
    format_coloring,
    make_extension,
    make_zinf,
    make_zs,
    parse_coloring,
)
from .counting import TripleCount, count_fast, count_naive, eval_F, eval_G
from .halfint import HalfInt
from .pingpong import VolleyParams, classify, satisfies_volleys, solve, survey_w

__all__ = [
    "ColoringParseError", "FamilyParams", "HalfInt", "InvalidParameter", "RColoring",
    "RunLengthSpec", "TripleCount", "VolleyParams", "certify_local_min", "classify",
    "closed_partial_F", "closed_partial_G", "complement", "count_fast", "count_naive",
    "eval_F", "eval_G", "flip_delta", "format_coloring", "make_extension", "make_zinf",
    "make_zs", "parse_coloring", "satisfies_volleys", "solve", "survey_w",
]
