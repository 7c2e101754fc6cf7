"""Construction expressions: AST, recursive-descent parser and printer.

Grammar::

    ring  := "Zmod(" int ")" | "F2" | "M(" int "," ring ")" | "T(" int "," ring ")"
           | "product(" ring {"," ring} ")" | "trivext(" ring ")" | "polyq(" ring "," int ")"
           | "groupring(" ring "," group ")" | "corner(" ring "," int ")"
           | "quot(" ring "," "ideal(" int {"," int} ")" ")"
           | "A(" int "," int "," ring ")" | "B(" int "," int "," ring ")" | "C(" int "," ring ")"
           | "S(" int "," int "," ring ")" | "Tnm(" int "," int "," ring ")" | "U(" int "," ring ")"
           | "@" path
    group := "C(" int ")" | "prod(" group "," group ")" | "D4" | "Q8"

``F2`` parses to ``Zmod(2)``. ``@path`` loads a raw ring from a JSON file.
The printer writes the labels the constructors use, so ``parse(to_text(t)) == t``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import ParseError

__all__ = ["Ring", "Group", "Node", "parse", "parse_group", "to_text", "RING_FORMS", "GROUP_FORMS"]


@dataclass(frozen=True)
class Ring:
    """A ring constructor applied to arguments (ints, rings, groups or int tuples)."""

    op: str
    args: tuple = ()

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Group:
    op: str
    args: tuple = ()

    def __str__(self) -> str:
        return to_text(self)


Node = Union[Ring, Group]

# Argument signature per constructor: "i" int, "r" ring, "g" group, "r+" one or more rings,
# "I" the ideal(...) generator list.
RING_FORMS = {
    "Zmod": "i", "M": "ir", "T": "ir", "product": "r+", "trivext": "r", "polyq": "ri",
    "groupring": "rg", "corner": "ri", "quot": "rI", "A": "iir", "B": "iir", "C": "ir",
    "S": "iir", "Tnm": "iir", "U": "ir",
}
GROUP_FORMS = {"C": "i", "prod": "gg"}
_ATOMS_GROUP = {"D4", "Q8"}

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<path>@[^\s,()]+)|(?P<punct>[(),]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                start = len(text) - len(text[pos:].lstrip())
                raise ParseError(f"unexpected character {text[start]!r}", start)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def take(self, kind: str, value: str | None = None) -> str:
        k, v, pos = self.peek()
        if k != kind or (value is not None and v != value):
            want = repr(value) if value else kind
            got = "end of input" if k == "end" else repr(v)
            raise ParseError(f"expected {want}, got {got}", pos)
        self.i += 1
        return v

    def integer(self) -> int:
        pos = self.peek()[2]
        n = int(self.take("int"))
        if n < 0:
            raise ParseError("expected a non-negative integer", pos)
        return n

    def ring(self) -> Ring:
        k, v, pos = self.peek()
        if k == "path":
            self.i += 1
            return Ring("@", (v[1:],))
        name = self.take("name")
        if name == "F2":
            return Ring("Zmod", (2,))
        if name not in RING_FORMS:
            raise ParseError(f"unknown ring constructor {name!r}", pos)
        return Ring(name, self.arguments(RING_FORMS[name]))

    def group(self) -> Group:
        pos = self.peek()[2]
        name = self.take("name")
        if name in _ATOMS_GROUP:
            return Group(name)
        if name not in GROUP_FORMS:
            raise ParseError(f"unknown group {name!r}", pos)
        return Group(name, self.arguments(GROUP_FORMS[name]))

    def arguments(self, sig: str) -> tuple:
        self.take("punct", "(")
        args: list = []
        if sig == "r+":
            args.append(self.ring())
            while self.peek()[1] == ",":
                self.i += 1
                args.append(self.ring())
        else:
            for j, s in enumerate(sig):
                if j:
                    self.take("punct", ",")
                if s == "i":
                    args.append(self.integer())
                elif s == "r":
                    args.append(self.ring())
                elif s == "g":
                    args.append(self.group())
                elif s == "I":
                    self.take("name", "ideal")
                    self.take("punct", "(")
                    gens = [self.integer()]
                    while self.peek()[1] == ",":
                        self.i += 1
                        gens.append(self.integer())
                    self.take("punct", ")")
                    args.append(tuple(gens))
        self.take("punct", ")")
        return tuple(args)

    def finish(self) -> None:
        k, v, pos = self.peek()
        if k != "end":
            raise ParseError(f"unexpected trailing {v!r}", pos)


def parse(text: str) -> Ring:
    """Parse a ring expression; raises :class:`ParseError` with a character position."""
    p = _Parser(text)
    node = p.ring()
    p.finish()
    return node


def parse_group(text: str) -> Group:
    p = _Parser(text)
    node = p.group()
    p.finish()
    return node


def to_text(node: Node) -> str:
    """Canonical text; ``Zmod(2)`` prints as ``F2``."""
    if isinstance(node, Ring) and node.op == "@":
        return f"@{node.args[0]}"
    if isinstance(node, Ring) and node.op == "Zmod" and node.args == (2,):
        return "F2"
    if not node.args and node.op in _ATOMS_GROUP:
        return node.op
    parts = []
    for a in node.args:
        if isinstance(a, tuple):
            parts.append(f"ideal({', '.join(map(str, a))})")
        elif isinstance(a, (Ring, Group)):
            parts.append(to_text(a))
        else:
            parts.append(str(a))
    return f"{node.op}({', '.join(parts)})"
