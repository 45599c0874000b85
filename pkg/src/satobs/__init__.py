"""Exact obstructions to satellite operators being concordance homomorphisms.

Pipeline: annular pattern diagram -> lifts to a prime-power cyclic branched
cover -> linking/framing data -> hypothesis checks -> a twist-move
certificate and a d-invariant bound.
"""
from .corpus import Pattern, Report, ReportEntry, analyze, analyze_corpus, builtin_knots, builtin_patterns
from .covering import LiftedLink, cable_pattern, lift, torus_link, whitehead_pattern
from .diagram import AnnularMorseWord, BraidWord, parse_word
from .pipeline import CoverData, Outcome, Verdict, check, check_composite, check_finite_order, check_null_homologous

__version__ = "0.1.0"

__all__ = [
    "AnnularMorseWord", "BraidWord", "CoverData", "LiftedLink", "Outcome", "Pattern", "Report",
    "ReportEntry", "Verdict", "analyze", "analyze_corpus", "builtin_knots", "builtin_patterns",
    "cable_pattern", "check", "check_composite", "check_finite_order", "check_null_homologous", "lift",
    "parse_word", "torus_link", "whitehead_pattern",
]
