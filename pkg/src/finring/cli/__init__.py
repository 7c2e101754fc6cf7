"""Command-line front end and the construction-expression language."""

from .evaluate import EvalCaps, build, evaluate, evaluate_group, load_raw_ring
from .expr import Group, Ring, parse, parse_group, to_text
from .main import Config, main

__all__ = [
    "EvalCaps", "build", "evaluate", "evaluate_group", "load_raw_ring",
    "Group", "Ring", "parse", "parse_group", "to_text",
    "Config", "main",
]
