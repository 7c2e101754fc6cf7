"""Embeddings, corner rings, generated ideals and quotient rings."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NotAnIdeal, NotIdempotent, SizeCapExceeded, VerificationFailed, ZeroIdempotent
from ..kernel import FiniteRing, Subset, TableRing, materialize, table_cap
from .rings import LinearRing, MatrixRing, Origin, TrivialExtension, _finish

__all__ = [
    "RingEmbedding",
    "corner",
    "ideal_generated",
    "is_ideal",
    "quotient_ring",
    "is_good_subring",
    "constant_embedding",
    "cyclic_subgroup_embedding",
    "base_into_trivial_extension",
    "diagonal_embedding",
    "banded_embedding",
]

EMBED_EXHAUSTIVE_CAP = 4096
EMBED_SAMPLES = 100_000
EMBED_SEED = 0


def _pairs_check(sub: FiniteRing, sup: FiniteRing, f: np.ndarray, exhaustive_cap: int, samples: int, seed: int) -> dict:
    """Check additivity and multiplicativity of ``f``; raise with a witness pair."""
    n = sub.size
    if n <= exhaustive_cap:
        idx = np.arange(n)
        rows = max(1, (1 << 20) // n)
        for start in range(0, n, rows):
            a = idx[start:start + rows, None]
            for name, op_sub, op_sup in (("additive", sub.add_many, sup.add_many), ("multiplicative", sub.mul_many, sup.mul_many)):
                lhs = f[op_sub(a, idx[None, :])]
                rhs = op_sup(f[a], f[idx][None, :])
                bad = np.argwhere(lhs != rhs)
                if bad.size:
                    i, j = bad[0]
                    raise VerificationFailed(f"map is not {name}", (int(a[i, 0]), int(j)))
        return {"mode": "exhaustive", "pairs": n * n}
    rng = np.random.default_rng(seed)
    a, b = rng.integers(0, n, size=samples), rng.integers(0, n, size=samples)
    for name, op_sub, op_sup in (("additive", sub.add_many, sup.add_many), ("multiplicative", sub.mul_many, sup.mul_many)):
        bad = np.flatnonzero(f[op_sub(a, b)] != op_sup(f[a], f[b]))
        if bad.size:
            raise VerificationFailed(f"map is not {name}", (int(a[bad[0]]), int(b[bad[0]])))
    return {"mode": "sampled", "pairs": int(samples), "seed": int(seed)}


@dataclass
class RingEmbedding:
    """An injective ring homomorphism ``sub -> sup`` given by an index array.

    Construction verifies the map. ``unital=False`` admits maps sending the
    identity to a nonzero idempotent, as for corner rings.
    """

    sub: FiniteRing
    sup: FiniteRing
    map: np.ndarray
    unital: bool = True
    report: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        f = np.asarray(self.map, dtype=np.int64)
        if f.shape != (self.sub.size,):
            raise VerificationFailed("map length differs from the subring size")
        if ((f < 0) | (f >= self.sup.size)).any():
            raise VerificationFailed("map leaves the ambient ring")
        if np.unique(f).size != f.size:
            _, first = np.unique(f, return_index=True)
            dup = np.setdiff1d(np.arange(f.size), first)[0]
            raise VerificationFailed("map is not injective", (int(dup),))
        if self.unital and f[self.sub.one] != self.sup.one:
            raise VerificationFailed("map does not send 1 to 1", (self.sub.one,))
        f.setflags(write=False)
        self.map = f
        self.report = _pairs_check(self.sub, self.sup, f, EMBED_EXHAUSTIVE_CAP, EMBED_SAMPLES, EMBED_SEED)

    def image(self) -> Subset:
        return Subset.from_indices(self.sup, self.map)

    def pullback(self, S: Subset) -> Subset:
        """Elements of ``sub`` whose image lies in ``S``."""
        return Subset(self.sub, S.mask[self.map])

    def __call__(self, a: int) -> int:
        return int(self.map[int(a)])


def is_good_subring(E: RingEmbedding) -> bool:
    """True when the units of the subring are exactly the preimage of the ambient units."""
    from ..analysis import units

    return units(E.sub) == E.pullback(units(E.sup))


def _index_ring(R: FiniteRing, members: np.ndarray, one: int, label: str, origin: Origin, verify: bool = True) -> TableRing:
    """The table ring on ``members`` (sorted indices of ``R``) with R's operations."""
    if members.size > table_cap():
        raise SizeCapExceeded(label, int(members.size), table_cap())
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[members] = np.arange(members.size)
    add = pos[R.add_many(members[:, None], members[None, :])]
    mul = pos[R.mul_many(members[:, None], members[None, :])]
    if (add < 0).any() or (mul < 0).any():
        raise VerificationFailed(f"{label}: subset not closed")
    return _finish(TableRing(add, mul, int(pos[R.zero]), int(pos[one]), label, origin), verify)


def corner(R: FiniteRing, e: int, verify: bool = True) -> tuple[TableRing, RingEmbedding]:
    """The corner ring ``eRe`` with identity ``e`` and its (non-unital) embedding into ``R``.

    ``verify=False`` skips the axiom check; the embedding is still verified.
    """
    e = int(e)
    if R.mul(e, e) != e:
        raise NotIdempotent(f"{R.describe(e)} is not idempotent in {R.label}")
    if e == R.zero:
        raise ZeroIdempotent(f"corner at the zero idempotent of {R.label}")
    idx = np.arange(R.size)
    members = np.unique(R.mul_many(R.mul_many(e, idx), e))
    C = _index_ring(R, members, e, f"corner({R.label}, {e})", Origin("corner", (R,), extra=e), verify)
    return C, RingEmbedding(C, R, members, unital=(e == R.one))


def _closure_step(R: TableRing, mask: np.ndarray) -> np.ndarray:
    X = np.flatnonzero(mask)
    out = mask.copy()
    out[R.mul_table[:, X].ravel()] = True
    out[R.mul_table[X, :].ravel()] = True
    out[R.add_table[X][:, X].ravel()] = True
    return out


def ideal_generated(R: FiniteRing, S: Subset | list[int]) -> Subset:
    """Smallest two-sided ideal containing ``S``."""
    T = materialize(R)
    mask = np.zeros(R.size, dtype=bool)
    mask[R.zero] = True
    mask[np.asarray(S.indices() if isinstance(S, Subset) else list(S), dtype=np.int64)] = True
    while True:
        nxt = _closure_step(T, mask)
        if (nxt == mask).all():
            return Subset(R, mask)
        mask = nxt


def is_ideal(R: FiniteRing, I: Subset) -> bool:
    if I.ring.size != R.size or not I.mask[R.zero]:
        return False
    return bool((_closure_step(materialize(R), I.mask) == I.mask).all())


def _generators(R: FiniteRing, I: Subset) -> list[int]:
    """A small generating set for ``I``, chosen greedily in index order."""
    gens: list[int] = []
    span = Subset.from_indices(R, [R.zero])
    for a in I:
        if a not in span:
            gens.append(a)
            span = ideal_generated(R, gens)
            if span == I:
                break
    return gens


@dataclass(frozen=True)
class QuotientData:
    ideal: Subset
    projection: np.ndarray
    representatives: np.ndarray


def quotient_ring(R: FiniteRing, I: Subset, label: str | None = None) -> TableRing:
    """``R/I`` on coset representatives (the least index of each coset).

    The returned ring's ``origin.extra`` holds the ideal, the projection
    ``R -> R/I`` as an index array, and the representatives.
    """
    if not is_ideal(R, I):
        raise NotAnIdeal(f"{I!r} is not a two-sided ideal of {R.label}")
    T = materialize(R)
    members = I.indices()
    rep = T.add_table[:, members].min(axis=1).astype(np.int64)
    reps = np.unique(rep)
    pos = np.full(R.size, -1, dtype=np.int64)
    pos[reps] = np.arange(reps.size)
    proj = pos[rep]
    add = proj[T.add_table[reps][:, reps]]
    mul = proj[T.mul_table[reps][:, reps]]
    if label is None:
        gens = _generators(R, I) or [R.zero]
        label = f"quot({R.label}, ideal({', '.join(map(str, gens))}))"
    proj.setflags(write=False)
    origin = Origin("quotient", (R,), extra=QuotientData(I, proj, reps))
    return _finish(TableRing(add, mul, int(proj[R.zero]), int(proj[R.one]), label, origin), True)


# -- canonical embeddings used by the good-subring claims -------------------

def constant_embedding(R: FiniteRing, ext: LinearRing) -> RingEmbedding:
    """``R -> ext`` sending ``r`` to ``r`` times the identity.

    Works for any coefficient-vector ring over ``R`` (group rings,
    truncated polynomial rings, matrix rings).
    """
    one = ext.decode(ext.one)
    base = ext.base
    if not np.isin(one, [base.zero, base.one]).all():
        raise VerificationFailed("identity has coordinates other than 0 and 1")
    coords = np.where(one[None, :] == base.one, np.arange(base.size)[:, None], base.zero)
    return RingEmbedding(R if R.size == base.size else base, ext, ext.encode(coords))


def cyclic_subgroup_embedding(RG: LinearRing, g: int) -> RingEmbedding:
    """``R<g> -> RG`` for the cyclic subgroup generated by ``g``."""
    from .groups import cyclic
    from .rings import group_ring

    G = RG.origin.group
    R = RG.base
    powers = G.powers(g)
    sub = group_ring(R, cyclic(len(powers)))
    coords = sub.decode(np.arange(sub.size))
    full = np.full((sub.size, G.size), R.zero, dtype=np.int64)
    full[:, powers] = coords
    return RingEmbedding(sub, RG, RG.encode(full))


def base_into_trivial_extension(TE: TrivialExtension) -> RingEmbedding:
    """``r -> (r, 0)``."""
    R = TE.R
    return RingEmbedding(R, TE, np.asarray(TE.encode(np.arange(R.size), TE.M.zero)))


def diagonal_embedding(R: FiniteRing, Tn: MatrixRing) -> RingEmbedding:
    """``r -> r I`` into a matrix subring containing the scalar matrices."""
    return constant_embedding(R, Tn)


def banded_embedding(P: LinearRing, Tn: MatrixRing) -> RingEmbedding:
    """``R[x]/(x^n) -> T_n(R)``: ``sum a_i x^i`` goes to the matrix with ``a_k`` on the k-th superdiagonal."""
    n = Tn.N
    if P.dim != n:
        raise VerificationFailed("truncation degree differs from the matrix size")
    coords = P.decode(np.arange(P.size))
    images = np.empty(P.size, dtype=np.int64)
    for i, c in enumerate(coords):
        M = np.full((n, n), P.base.zero, dtype=np.int64)
        for r in range(n):
            M[r, r:] = c[: n - r]
        images[i] = Tn.from_matrix(M)
    return RingEmbedding(P, Tn, images)
