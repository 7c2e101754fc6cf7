"""The curated ring corpus the claims are run on."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..constructions import groups as grp
from ..constructions import rings as rg
from ..constructions import section5 as s5
from ..constructions import subrings
from ..errors import VerificationFailed
from ..kernel import STRUCTURE_CAP, TABLE_CAP, FiniteRing

__all__ = ["Caps", "RingCache", "CorpusEntry", "default_corpus", "corpus_entries"]


@dataclass(frozen=True)
class Caps:
    table_cap: int = TABLE_CAP
    structure_cap: int = STRUCTURE_CAP


class RingCache:
    """Label-keyed construction cache shared between corpus entries and claims."""

    def __init__(self) -> None:
        self._rings: dict[str, FiniteRing] = {}
        self._lock = threading.RLock()

    def get(self, label: str, make: Callable[[], FiniteRing]) -> FiniteRing:
        with self._lock:
            if label not in self._rings:
                self._rings[label] = make()
            return self._rings[label]

    __call__ = get


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    size: int
    make: Callable[[], FiniteRing]


def _entries(cache: RingCache) -> list[tuple[str, int, Callable[[], FiniteRing]]]:
    """(label, size, builder) for every candidate ring, before caps."""
    z = {n: (lambda n=n: cache("F2" if n == 2 else f"Zmod({n})", lambda: rg.zmod(n))) for n in (2, 4, 6, 8)}
    F2, Z4, Z6, Z8 = z[2], z[4], z[6], z[8]
    out: list[tuple[str, int, Callable]] = []

    def add(label: str, size: int, make: Callable[[], FiniteRing]) -> None:
        out.append((label, size, lambda: cache(label, make)))

    for n in [*range(2, 17), 32, 64]:
        add("F2" if n == 2 else f"Zmod({n})", n, lambda n=n: rg.zmod(n))
    add("product(F2, F2)", 4, lambda: rg.product(F2(), F2()))
    add("product(F2, Zmod(4))", 8, lambda: rg.product(F2(), Z4()))

    add("M(2, F2)", 16, lambda: rg.matrix_ring(2, F2()))
    add("M(2, Zmod(4))", 256, lambda: rg.matrix_ring(2, Z4()))
    add("M(2, product(F2, F2))", 256, lambda: rg.matrix_ring(2, rg.product(F2(), F2())))
    add("M(3, F2)", 512, lambda: rg.matrix_ring(3, F2()))

    for n in (2, 3, 4):
        add(f"T({n}, F2)", 2 ** (n * (n + 1) // 2), lambda n=n: rg.upper_triangular(n, F2()))
    add("T(2, Zmod(4))", 64, lambda: rg.upper_triangular(2, Z4()))
    add("T(3, Zmod(4))", 4096, lambda: rg.upper_triangular(3, Z4()))
    add("T(2, Zmod(6))", 216, lambda: rg.upper_triangular(2, Z6()))
    add("T(3, Zmod(6))", 6 ** 6, lambda: rg.upper_triangular(3, Z6()))

    for name, R, q in (("F2", F2, 2), ("Zmod(4)", Z4, 4), ("Zmod(8)", Z8, 8), ("Zmod(6)", Z6, 6)):
        add(f"trivext({name})", q * q, lambda R=R: rg.trivial_extension(R()))
    for name, R, q, degrees in (("F2", F2, 2, (2, 3, 4)), ("Zmod(4)", Z4, 4, (2, 3)),
                                ("Zmod(8)", Z8, 8, (2, 3)), ("Zmod(6)", Z6, 6, (2, 3))):
        for n in degrees:
            add(f"polyq({name}, {n})", q ** n, lambda R=R, n=n: rg.poly_quotient(R(), n))

    add("FT(F2, F2; F2)", 8, lambda: rg.formal_triangular(F2(), F2(), rg.regular_bimodule(F2())))

    def ft_z4() -> FiniteRing:
        # F2 as a (Z/4, F2)-bimodule through reduction mod 2
        N = rg.induced_bimodule(F2(), Z4(), F2(), np.arange(4) % 2, np.arange(2))
        return rg.formal_triangular(Z4(), F2(), N)

    add("FT(Zmod(4), F2; F2)", 16, ft_z4)

    group_list = [
        (lambda: grp.cyclic(2), 2), (lambda: grp.cyclic(3), 3), (lambda: grp.cyclic(4), 4),
        (lambda: grp.group_product(grp.cyclic(2), grp.cyclic(2)), 4),
        (lambda: grp.dihedral(4), 8), (grp.quaternion8, 8),
        (lambda: grp.group_product(grp.cyclic(2), grp.cyclic(3)), 6),
    ]
    for rname, R, q in (("F2", F2, 2), ("Zmod(4)", Z4, 4)):
        for G, order in group_list:
            label = f"groupring({rname}, {G().label})"
            add(label, q ** order, lambda R=R, G=G: rg.group_ring(R(), G()))

    M2 = lambda: cache("M(2, F2)", lambda: rg.matrix_ring(2, F2()))  # noqa: E731
    for e in range(16):
        add(f"corner(M(2, F2), {e})", -1, lambda e=e: subrings.corner(M2(), e)[0])
    add("quot(Zmod(8), ideal(4))", 4,
        lambda: subrings.quotient_ring(Z8(), subrings.ideal_generated(Z8(), [4]), "quot(Zmod(8), ideal(4))"))

    for n, m in ((2, 2), (2, 3), (3, 2)):
        add(f"A({n}, {m}, F2)", 2 ** (n + m - 1), lambda n=n, m=m: s5.a_ring(n, m, F2()))
        add(f"Tnm({n}, {m}, F2)", 2 ** (n + m - 1), lambda n=n, m=m: s5.t_ring(n, m, F2()))
        add(f"B({n}, {m}, F2)", 2 ** (n * m), lambda n=n, m=m: s5.b_ring(n, m, F2()))
        add(f"S({n}, {m}, F2)", 2 ** (n * m), lambda n=n, m=m: s5.s_ring(n, m, F2()))
    for n in (3, 4):
        add(f"C({n}, F2)", 2 ** (2 * n - 2), lambda n=n: s5.c_ring(n, F2()))
        add(f"U({n}, F2)", 2 ** (2 * n - 2), lambda n=n: s5.u_ring(n, F2()))
    return out


def _idempotent_corners(entries, cache):
    """Keep corner entries only at nonzero idempotents of M(2, F2); fill in their sizes."""
    M2 = cache.get("M(2, F2)", lambda: rg.matrix_ring(2, rg.zmod(2)))
    out = []
    for label, size, make in entries:
        if label.startswith("corner(M(2, F2), "):
            e = int(label.rsplit(",", 1)[1].rstrip(")"))
            if e == M2.zero or M2.mul(e, e) != e:
                continue
            size = make().size
        out.append((label, size, make))
    return out


def corpus_entries(caps: Caps | None = None, cache: RingCache | None = None) -> tuple[list[CorpusEntry], list[tuple[str, int]]]:
    """Entries within ``caps.table_cap``, plus the (label, size) pairs left out."""
    caps = caps or Caps()
    cache = cache or RingCache()
    kept, dropped = [], []
    for label, size, make in _idempotent_corners(_entries(cache), cache):
        if size > min(caps.table_cap, caps.structure_cap):
            dropped.append((label, size))
        else:
            kept.append(CorpusEntry(label, size, make))
    return kept, dropped


def default_corpus(caps: Caps | None = None, cache: RingCache | None = None) -> list[FiniteRing]:
    """Build every corpus ring that fits under the caps."""
    entries, _ = corpus_entries(caps, cache)
    rings = []
    for entry in entries:
        R = entry.make()
        if R.size != entry.size:
            raise VerificationFailed(f"corpus entry {entry.label} has size {R.size}, expected {entry.size}")
        rings.append(R)
    return rings
