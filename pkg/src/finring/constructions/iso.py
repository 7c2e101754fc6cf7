"""Explicit isomorphisms from monomial algebras onto matrix models, and a
brute-force isomorphism search for tiny rings."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..errors import SizeCapExceeded, VerificationFailed
from ..kernel import FiniteRing, materialize
from . import subrings
from .rings import LinearRing, MatrixRing
from .section5 import a_ring, b_ring, c_ring, s_ring, t_ring, u_ring

__all__ = [
    "ISO_KINDS",
    "IsoResult",
    "display_template",
    "lemma51_iso",
    "element_invariants",
    "ring_fingerprint",
    "brute_force_isomorphic",
    "ISO_SEARCH_CAP",
]

ISO_KINDS = ("A->T", "B->S", "C->U")
ISO_SEARCH_CAP = 16


def display_template(kind: str, n: int, m: int | None = None) -> np.ndarray:
    """Entry ``(r, s)`` holds the domain coordinate placed there by the map, or -1.

    A->T: the ``x`` coefficients fill a banded ``n``-block and the ``y``
    coefficients a banded ``m``-block, both with the constant on the diagonal.
    B->S: ``y^i`` fills a banded ``m``-block at the top left, ``x^j`` a banded
    ``n``-block at the bottom right, and ``y^i x^j`` the corner, with row ``r``
    carrying ``i = m-1-r``.
    C->U: row ``r`` at offset ``k`` holds the alternating word of length ``k``
    starting with ``y`` for even ``r`` and with ``x`` for odd ``r``.
    """
    if kind == "A->T":
        N = n + m
        t = np.full((N, N), -1, dtype=np.int64)
        for r in range(n):
            for k in range(n - r):
                t[r, r + k] = k
        for r in range(m):
            for k in range(m - r):
                t[n + r, n + r + k] = 0 if k == 0 else n - 1 + k
        return t
    if kind == "B->S":
        N = n + m - 1
        t = np.full((N, N), -1, dtype=np.int64)
        for r in range(m):
            for k in range(m - r):
                t[r, r + k] = k * n
        for r in range(n):
            for k in range(n - r):
                t[m - 1 + r, m - 1 + r + k] = k
        for r in range(m - 1):
            for c in range(m, N):
                t[r, c] = (m - 1 - r) * n + (c - m + 1)
        return t
    if kind == "C->U":
        t = np.full((n, n), -1, dtype=np.int64)
        for r in range(n):
            t[r, r] = 0
            for k in range(1, n - r):
                if r % 2 == 0:
                    t[r, r + k] = 2 * n - 3 if k == n - 1 else 2 * k - 1
                else:
                    t[r, r + k] = 2 * k
        return t
    raise ValueError(f"unknown isomorphism kind {kind!r}")


@dataclass
class IsoResult:
    kind: str
    n: int
    m: int | None
    domain: LinearRing
    codomain: MatrixRing
    map: np.ndarray
    mode: str
    pairs: int
    seed: int | None

    def as_dict(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "m": self.m, "domain": self.domain.label,
               "codomain": self.codomain.label, "mode": self.mode, "pairs": self.pairs}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def lemma51_iso(kind: str, n: int, m: int | None, R: FiniteRing) -> IsoResult:
    """Build the coefficient-shuffling map for ``kind`` and verify it is a ring isomorphism.

    Verification covers injectivity, equal sizes, additivity, multiplicativity
    and ``1 -> 1``; all pairs are checked up to 4096 elements, a seeded sample
    above. Raises :class:`VerificationFailed` with a witness pair otherwise.

    For B->S the map lands in ``s_ring(m, n, R)``: the ``y`` block, of size
    ``m``, sits at the top left.
    """
    if kind == "A->T":
        dom, cod = a_ring(n, m, R), t_ring(n, m, R)
    elif kind == "B->S":
        dom, cod = b_ring(n, m, R), s_ring(m, n, R)
    elif kind == "C->U":
        dom, cod = c_ring(n, R), u_ring(n, R)
        m = None
    else:
        raise ValueError(f"unknown isomorphism kind {kind!r}")
    template = display_template(kind, n, m)
    coords = dom.decode(np.arange(dom.size))
    zero = dom.base.zero
    mats = np.where(template >= 0, coords[:, np.maximum(template, 0)], zero)
    images = cod.from_matrices(mats)
    if dom.size != cod.size:
        raise VerificationFailed(f"{dom.label} and {cod.label} differ in size")
    E = subrings.RingEmbedding(dom, cod, images)
    return IsoResult(kind, n, m, dom, cod, E.map, E.report["mode"], E.report["pairs"], E.report.get("seed"))


# -- brute-force search ----------------------------------------------------

def element_invariants(R: FiniteRing) -> list[tuple]:
    """Per-element data preserved by every ring isomorphism."""
    T = materialize(R)
    A, M = T.add_table.astype(np.int64), T.mul_table.astype(np.int64)
    n = R.size
    idx = np.arange(n)
    add_order = np.ones(n, dtype=np.int64)
    x = idx.copy()
    while (x != R.zero).any():
        add_order += x != R.zero
        x = np.where(x != R.zero, A[x, idx], x)
    left_ann = (M == R.zero).sum(axis=1)
    right_ann = (M == R.zero).sum(axis=0)
    commuting = (M == M.T).sum(axis=1)
    # orbit of powers: the first exponent where a^k repeats, and its cycle length
    shapes = []
    for a in range(n):
        seen, k, p = {}, 1, a
        while p not in seen:
            seen[p] = k
            p = int(M[p, a])
            k += 1
        shapes.append((seen[p], k - seen[p], p == R.zero))
    return [(int(add_order[a]), int(left_ann[a]), int(right_ann[a]), int(commuting[a])) + shapes[a] for a in range(n)]


def ring_fingerprint(R: FiniteRing) -> tuple:
    inv = element_invariants(R)
    return (R.size, tuple(sorted(Counter(inv).items())))


def _additive_generators(T) -> list[int]:
    A = T.add_table
    span = np.zeros(T.size, dtype=bool)
    span[T.zero] = True
    gens = []
    for g in range(T.size):
        if span[g]:
            continue
        gens.append(g)
        while True:
            nxt = span.copy()
            nxt[A[np.flatnonzero(span), g]] = True
            if (nxt == span).all():
                break
            span = nxt
    return gens


def brute_force_isomorphic(R: FiniteRing, S: FiniteRing, cap: int = ISO_SEARCH_CAP) -> np.ndarray | None:
    """An isomorphism ``R -> S`` as an index array, or ``None`` if there is none.

    Backtracks over images of additive generators, restricted to elements with
    matching invariants, and checks each completed additive map for
    multiplicativity.
    """
    for X in (R, S):
        if X.size > cap:
            raise SizeCapExceeded(f"isomorphism search on {X.label}", X.size, cap)
    if R.size != S.size:
        return None
    TR, TS = materialize(R), materialize(S)
    invR, invS = element_invariants(TR), element_invariants(TS)
    if Counter(invR) != Counter(invS):
        return None
    gens = _additive_generators(TR)
    candidates = [[b for b in range(S.size) if invS[b] == invR[g]] for g in gens]
    AR, MR = TR.add_table.astype(np.int64), TR.mul_table.astype(np.int64)
    AS, MS = TS.add_table.astype(np.int64), TS.mul_table.astype(np.int64)

    def extend(images: list[int]) -> np.ndarray | None:
        f = np.full(R.size, -1, dtype=np.int64)
        f[R.zero] = S.zero
        frontier = [R.zero]
        while frontier:
            nxt = []
            for a in frontier:
                for g, h in zip(gens, images):
                    b, c = int(AR[a, g]), int(AS[f[a], h])
                    if f[b] < 0:
                        f[b] = c
                        nxt.append(b)
                    elif f[b] != c:
                        return None
            frontier = nxt
        return f

    def search(images: list[int]) -> np.ndarray | None:
        if len(images) == len(gens):
            f = extend(images)
            if f is None or np.unique(f).size != R.size or f[R.one] != S.one:
                return None
            if (f[MR] != MS[f[:, None], f[None, :]]).any():
                return None
            return f
        for b in candidates[len(images)]:
            if b not in images:
                found = search(images + [b])
                if found is not None:
                    return found
        return None

    return search([])
