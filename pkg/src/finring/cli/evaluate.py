"""Turn construction expressions into rings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..constructions import groups as grp
from ..constructions import rings as rg
from ..constructions import section5 as s5
from ..constructions import subrings
from ..constructions.groups import FiniteGroup
from ..errors import EvalError, RingError
from ..kernel import STRUCTURE_CAP, TABLE_CAP, FiniteRing, make_ring
from .expr import Group, Ring, parse, to_text

__all__ = ["EvalCaps", "evaluate", "evaluate_group", "build", "load_raw_ring"]


@dataclass(frozen=True)
class EvalCaps:
    table_cap: int = TABLE_CAP
    structure_cap: int = STRUCTURE_CAP


def load_raw_ring(path: str) -> FiniteRing:
    """Ring from a JSON file ``{size, add, mul, zero, one}``; axioms are verified."""
    try:
        data = json.loads(Path(path).read_text())
        return make_ring(int(data["size"]), data["add"], data["mul"], int(data["zero"]), int(data["one"]), label=f"@{path}")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise EvalError(f"cannot load ring from {path}: {exc}") from None


def evaluate_group(node: Group) -> FiniteGroup:
    if node.op == "D4":
        return grp.dihedral(4)
    if node.op == "Q8":
        return grp.quaternion8()
    if node.op == "C":
        if node.args[0] < 1:
            raise EvalError("cyclic group order must be positive")
        return grp.cyclic(node.args[0])
    if node.op == "prod":
        return grp.group_product(evaluate_group(node.args[0]), evaluate_group(node.args[1]))
    raise EvalError(f"unknown group {node.op!r}")


def _eval(node: Ring, caps: EvalCaps) -> FiniteRing:
    op, a = node.op, node.args
    cap = caps.structure_cap
    if op == "@":
        return load_raw_ring(a[0])
    if op == "Zmod":
        if a[0] < 2:
            raise EvalError("Zmod(n) needs n >= 2")
        if a[0] > cap:
            raise EvalError(f"Zmod({a[0]}) exceeds the structure cap {cap}")
        return rg.zmod(a[0])
    if op == "product":
        return rg.product(*(_eval(r, caps) for r in a), cap=cap)
    if op == "trivext":
        return rg.trivial_extension(_eval(a[0], caps), cap=cap)
    if op == "polyq":
        return rg.poly_quotient(_eval(a[0], caps), a[1], cap=cap)
    if op == "groupring":
        return rg.group_ring(_eval(a[0], caps), evaluate_group(a[1]), cap=cap)
    if op == "M":
        return rg.matrix_ring(a[0], _eval(a[1], caps), cap=cap)
    if op == "T":
        return rg.upper_triangular(a[0], _eval(a[1], caps), cap=cap)
    if op == "corner":
        R, e = _eval(a[0], caps), a[1]
        if e >= R.size:
            raise EvalError(f"element index {e} out of range for {R.label}")
        return subrings.corner(R, e)[0]
    if op == "quot":
        R = _eval(a[0], caps)
        gens = a[1]
        if max(gens) >= R.size:
            raise EvalError(f"generator index out of range for {R.label}")
        return subrings.quotient_ring(R, subrings.ideal_generated(R, list(gens)), label=to_text(node))
    if op == "A":
        return s5.a_ring(a[0], a[1], _eval(a[2], caps), cap=cap)
    if op == "B":
        return s5.b_ring(a[0], a[1], _eval(a[2], caps), cap=cap)
    if op == "S":
        return s5.s_ring(a[0], a[1], _eval(a[2], caps), cap=cap)
    if op == "Tnm":
        return s5.t_ring(a[0], a[1], _eval(a[2], caps), cap=cap)
    if op == "C":
        return s5.c_ring(a[0], _eval(a[1], caps), cap=cap)
    if op == "U":
        return s5.u_ring(a[0], _eval(a[1], caps), cap=cap)
    raise EvalError(f"unknown ring constructor {op!r}")


def evaluate(node: Ring, caps: EvalCaps | None = None) -> FiniteRing:
    """Evaluate an AST; construction failures become :class:`EvalError`."""
    caps = caps or EvalCaps()
    try:
        R = _eval(node, caps)
    except EvalError:
        raise
    except (RingError, ValueError) as exc:
        raise EvalError(f"{to_text(node)}: {type(exc).__name__}: {exc}") from None
    if R.size > caps.table_cap:
        raise EvalError(f"{R.label} has {R.size} elements, above the table cap {caps.table_cap}")
    return R


def build(text: str, caps: EvalCaps | None = None) -> FiniteRing:
    """Parse and evaluate in one step; raises ``ParseError`` or ``EvalError``."""
    return evaluate(parse(text), caps)

