"""Element subsets, ring classifiers and clean-type element predicates.

Everything here works on the materialized tables of a ring and is memoized
on the ring, so each subset is computed once per ring. Sweeps that touch
all pairs run in row blocks to bound memory.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

import numpy as np

from .constructions.rings import Origin
from .constructions.subrings import ideal_generated, quotient_ring
from .errors import NotAGroupRing, PreconditionFailed, SizeCapExceeded
from .kernel import FiniteRing, Subset, TableRing, center, materialize

NSTAR_CAP = 1024
_BLOCK = 1 << 20

__all__ = [
    "NSTAR_CAP",
    "units",
    "unit_inverses",
    "idempotents",
    "nilpotents",
    "jacobson_radical",
    "quasinilpotents",
    "lower_nilradical",
    "is_2primal",
    "augmentation_ideal",
    "radical_quotient",
    "one_plus",
    "is_uq",
    "is_uj",
    "is_uu",
    "clean_masks",
    "RingProfile",
    "classify",
    "ElementPredicates",
    "element_predicates",
    "gs_drazin_inverse",
    "gs_drazin_mask",
    "geometric_sum_check",
]


def _tables(R: FiniteRing) -> tuple[TableRing, np.ndarray, np.ndarray]:
    T = materialize(R)
    return T, T.add_table.astype(np.int64), T.mul_table.astype(np.int64)


def _blocks(n: int):
    rows = max(1, _BLOCK // n)
    for start in range(0, n, rows):
        yield slice(start, min(n, start + rows))


def _one_minus(R: FiniteRing) -> np.ndarray:
    """``1 - x`` for every ``x``."""

    def build():
        T, A, _ = _tables(R)
        return A[R.one, T.negation_table()]

    return R.memo("one_minus", build)


def _unit_data(R: FiniteRing) -> tuple[np.ndarray, np.ndarray]:
    def build():
        _, _, M = _tables(R)
        hit = M == R.one
        has_right = hit.any(axis=1)
        inv = np.where(has_right, hit.argmax(axis=1), -1)
        ok = has_right & (M[inv, np.arange(R.size)] == R.one)
        inv = np.where(ok, inv, -1)
        return ok, inv

    return R.memo("units", build)


def units(R: FiniteRing) -> Subset:
    """Two-sided units."""
    return Subset(R, _unit_data(R)[0])


def unit_inverses(R: FiniteRing) -> np.ndarray:
    """``inv[a]`` is the inverse of ``a``, or -1 for non-units."""
    return _unit_data(R)[1]


def idempotents(R: FiniteRing) -> Subset:
    def build():
        _, _, M = _tables(R)
        idx = np.arange(R.size)
        return Subset(R, M[idx, idx] == idx)

    return R.memo("idempotents", build)


def nilpotents(R: FiniteRing) -> Subset:
    """Elements with some power zero.

    A nilpotent element of an ``n``-element ring has index at most ``n``
    (its nonzero powers are distinct), so squaring until the exponent
    reaches ``n`` decides membership exactly.
    """

    def build():
        _, _, M = _tables(R)
        p = np.arange(R.size)
        exponent = 1
        while exponent < R.size:
            p = M[p, p]
            exponent *= 2
        return Subset(R, p == R.zero)

    return R.memo("nilpotents", build)


def jacobson_radical(R: FiniteRing) -> Subset:
    """``{a : 1 - ra is a unit for every r}``."""

    def build():
        _, _, M = _tables(R)
        U = _unit_data(R)[0]
        om = _one_minus(R)
        mask = np.ones(R.size, dtype=bool)
        for rows in _blocks(R.size):
            mask &= U[om[M[rows]]].all(axis=0)
        return Subset(R, mask)

    return R.memo("jacobson", build)


def quasinilpotents(R: FiniteRing) -> Subset:
    """``{a : 1 - ax is a unit for every x commuting with a}``."""

    def build():
        _, _, M = _tables(R)
        U = _unit_data(R)[0]
        om = _one_minus(R)
        mask = np.empty(R.size, dtype=bool)
        for rows in _blocks(R.size):
            left = M[rows]
            commute = left == M[:, rows].T
            mask[rows] = ~(commute & ~U[om[left]]).any(axis=1)
        return Subset(R, mask)

    return R.memo("quasinilpotents", build)


# -- lower nilradical ------------------------------------------------------

def _is_nilpotent_ideal(T: TableRing, I: Subset) -> bool:
    """Whether some power ``I^k`` (additive span of k-fold products) vanishes."""
    M = T.mul_table
    members = I.indices()
    power = I
    while True:
        P = power.indices()
        if P.size == 1 and P[0] == T.zero:
            return True
        products = np.unique(M[np.ix_(P, members)])
        nxt = ideal_generated(T, products)
        if nxt == power:
            return False
        power = nxt


def _nilpotent_ideal_sum(T: TableRing, nil: np.ndarray) -> Subset:
    """Sum of all nilpotent ideals: the ideals generated by single elements suffice."""
    W = Subset.from_indices(T, [T.zero])
    for a in np.flatnonzero(nil):
        if W.mask[a]:
            continue
        I = ideal_generated(T, [int(a)])
        if not nil[I.indices()].all():
            continue
        if _is_nilpotent_ideal(T, I):
            W = ideal_generated(T, np.concatenate([W.indices(), I.indices()]))
    return W


def lower_nilradical(R: FiniteRing, cap: int = NSTAR_CAP) -> Subset:
    """Prime radical through the Baer chain.

    Each step takes the sum of nilpotent ideals of the current quotient,
    passes to the quotient by it, and stops when that sum is zero. The
    result is the preimage in ``R`` of everything killed along the way.
    """
    if R.size > cap:
        raise SizeCapExceeded(f"lower nilradical of {R.label}", R.size, cap)

    def build():
        current = materialize(R)
        to_current = np.arange(R.size)
        while True:
            W = _nilpotent_ideal_sum(current, nilpotents(current).mask)
            if len(W) == 1:
                return Subset(R, to_current == current.zero)
            Q = quotient_ring(current, W, label=f"{current.label}/W")
            to_current = Q.origin.extra.projection[to_current]
            current = Q

    return R.memo(f"lower_nilradical:{cap}", build)


def is_2primal(R: FiniteRing, cap: int = NSTAR_CAP) -> bool:
    return nilpotents(R) == lower_nilradical(R, cap)


# -- group rings and quotients ---------------------------------------------

def augmentation_ideal(RG: FiniteRing) -> Subset:
    """Kernel of the coefficient-sum map ``RG -> R``."""
    origin = RG.origin
    if not isinstance(origin, Origin) or origin.kind != "groupring":
        raise NotAGroupRing(f"{RG.label} was not built as a group ring")

    def build():
        base = RG.base
        coords = RG.decode(np.arange(RG.size))
        total = np.full(RG.size, base.zero, dtype=np.int64)
        add = base.add_table.astype(np.int64)
        for g in range(coords.shape[1]):
            total = add[total, coords[:, g]]
        return Subset(RG, total == base.zero)

    return RG.memo("augmentation", build)


def radical_quotient(R: FiniteRing) -> TableRing:
    """``R/J(R)``; the projection lives in ``origin.extra.projection``."""
    return R.memo("radical_quotient", lambda: quotient_ring(R, jacobson_radical(R), label=f"{R.label}/J"))


# -- classifiers -----------------------------------------------------------

def one_plus(S: Subset) -> Subset:
    """The translate ``1 + S``."""
    return S.translate(S.ring.one)


def is_uq(R: FiniteRing) -> bool:
    return units(R) == one_plus(quasinilpotents(R))


def is_uj(R: FiniteRing) -> bool:
    return units(R) == one_plus(jacobson_radical(R))


def is_uu(R: FiniteRing) -> bool:
    return units(R) == one_plus(nilpotents(R))


def clean_masks(R: FiniteRing) -> dict[str, np.ndarray]:
    """Per-element clean-type flags from one scan over the idempotents.

    Keys: ``clean``, ``strongly_clean``, ``nil_clean``, ``J_clean``,
    ``quasi_nil_clean``, ``strongly_quasi_nil_clean``, and ``clean_count``
    (number of idempotents ``e`` with ``a - e`` a unit).
    """

    def build():
        T, A, M = _tables(R)
        neg = T.negation_table()
        U = _unit_data(R)[0]
        N, J, QN = nilpotents(R).mask, jacobson_radical(R).mask, quasinilpotents(R).mask
        n = R.size
        out = {k: np.zeros(n, dtype=bool) for k in (
            "clean", "strongly_clean", "nil_clean", "J_clean", "quasi_nil_clean", "strongly_quasi_nil_clean")}
        count = np.zeros(n, dtype=np.int64)
        for e in idempotents(R):
            d = A[:, neg[e]]
            commute = M[e] == M[:, e]
            unit = U[d]
            out["clean"] |= unit
            out["strongly_clean"] |= unit & commute
            out["nil_clean"] |= N[d]
            out["J_clean"] |= J[d]
            out["quasi_nil_clean"] |= QN[d]
            out["strongly_quasi_nil_clean"] |= QN[d] & commute
            count += unit
        out["clean_count"] = count
        return out

    return R.memo("clean_masks", build)


def _local(R: FiniteRing) -> bool:
    _, A, _ = _tables(R)
    non = np.flatnonzero(~_unit_data(R)[0])
    return bool((~_unit_data(R)[0])[A[np.ix_(non, non)]].all())


def _regular(R: FiniteRing) -> bool:
    _, _, M = _tables(R)
    idx = np.arange(R.size)
    for rows in _blocks(R.size):
        a = idx[rows]
        # (a x) a == a for some x
        if not (M[M[rows], a[:, None]] == a[:, None]).any(axis=1).all():
            return False
    return True


def _dedekind_finite(R: FiniteRing) -> bool:
    _, _, M = _tables(R)
    hit = M == R.one
    return bool(not (hit & ~hit.T).any())


@dataclass
class RingProfile:
    """Subsets and classifier flags of one ring.

    ``lower_nilradical`` and ``is_2primal`` are ``None`` above the N* cap.
    ``is_semipotent`` and ``is_potent`` hold for every finite ring:
    finite rings are semiperfect, so idempotents lift modulo the nilpotent
    radical and every left ideal outside J contains a nonzero idempotent.
    """

    ring: FiniteRing = field(repr=False)
    units: Subset = field(repr=False)
    inverses: np.ndarray = field(repr=False)
    idempotents: Subset = field(repr=False)
    nilpotents: Subset = field(repr=False)
    jacobson: Subset = field(repr=False)
    quasinilpotents: Subset = field(repr=False)
    center: Subset = field(repr=False)
    lower_nilradical: Subset | None = field(repr=False)
    is_uq: bool
    is_uj: bool
    is_uu: bool
    is_boolean: bool
    is_reduced: bool
    is_2primal: bool | None
    is_local: bool
    is_division: bool
    is_regular: bool
    is_semisimple: bool
    is_clean: bool
    is_uniquely_clean: bool
    is_strongly_clean: bool
    is_j_clean: bool
    is_strongly_quasi_nil_clean: bool
    is_dedekind_finite: bool
    is_commutative: bool
    is_semipotent: bool = True
    is_potent: bool = True

    @staticmethod
    def flag_names() -> list[str]:
        return [f.name for f in fields(RingProfile) if f.name.startswith("is_")]

    def flags(self) -> dict[str, bool | None]:
        return {name: getattr(self, name) for name in self.flag_names()}

    def subsets(self) -> dict[str, Subset | None]:
        return {
            "U": self.units,
            "Id": self.idempotents,
            "N": self.nilpotents,
            "J": self.jacobson,
            "QN": self.quasinilpotents,
            "Z": self.center,
            "N*": self.lower_nilradical,
        }


def classify(R: FiniteRing, nstar_cap: int = NSTAR_CAP) -> RingProfile:
    """Compute the full profile of ``R`` (memoized per cap)."""

    def build():
        U, Id, N = units(R), idempotents(R), nilpotents(R)
        J, QN, Z = jacobson_radical(R), quasinilpotents(R), center(R)
        nstar = lower_nilradical(R, nstar_cap) if R.size <= nstar_cap else None
        cm = clean_masks(R)
        n = R.size
        return RingProfile(
            ring=R,
            units=U,
            inverses=unit_inverses(R),
            idempotents=Id,
            nilpotents=N,
            jacobson=J,
            quasinilpotents=QN,
            center=Z,
            lower_nilradical=nstar,
            is_uq=is_uq(R),
            is_uj=is_uj(R),
            is_uu=is_uu(R),
            is_boolean=len(Id) == n,
            is_reduced=len(N) == 1,
            is_2primal=None if nstar is None else N == nstar,
            is_local=_local(R),
            is_division=len(U) == n - 1,
            is_regular=_regular(R),
            is_semisimple=len(J) == 1,
            is_clean=bool(cm["clean"].all()),
            is_uniquely_clean=bool((cm["clean_count"] == 1).all()),
            is_strongly_clean=bool(cm["strongly_clean"].all()),
            is_j_clean=bool(cm["J_clean"].all()),
            is_strongly_quasi_nil_clean=bool(cm["strongly_quasi_nil_clean"].all()),
            is_dedekind_finite=_dedekind_finite(R),
            is_commutative=len(Z) == n,
        )

    return R.memo(f"profile:{nstar_cap}", build)


# -- element-level predicates ----------------------------------------------

@dataclass(frozen=True)
class ElementPredicates:
    """Clean-type flags of one element with a witnessing idempotent where one exists."""

    element: int
    clean: bool
    strongly_clean: bool
    nil_clean: bool
    J_clean: bool
    quasi_nil_clean: bool
    strongly_quasi_nil_clean: bool
    witnesses: dict = field(default_factory=dict, compare=False)


def element_predicates(R: FiniteRing, a: int) -> ElementPredicates:
    a = int(a)
    T, A, M = _tables(R)
    neg = T.negation_table()
    U = _unit_data(R)[0]
    sets = {
        "clean": U,
        "nil_clean": nilpotents(R).mask,
        "J_clean": jacobson_radical(R).mask,
        "quasi_nil_clean": quasinilpotents(R).mask,
    }
    witnesses: dict[str, int] = {}
    for e in idempotents(R):
        d = int(A[a, neg[e]])
        commute = M[e, a] == M[a, e]
        for name, mask in sets.items():
            if mask[d]:
                witnesses.setdefault(name, e)
                if commute:
                    strong = "strongly_clean" if name == "clean" else "strongly_" + name
                    witnesses.setdefault(strong, e)
    return ElementPredicates(
        element=a,
        clean="clean" in witnesses,
        strongly_clean="strongly_clean" in witnesses,
        nil_clean="nil_clean" in witnesses,
        J_clean="J_clean" in witnesses,
        quasi_nil_clean="quasi_nil_clean" in witnesses,
        strongly_quasi_nil_clean="strongly_quasi_nil_clean" in witnesses,
        witnesses=witnesses,
    )


def gs_drazin_inverse(R: FiniteRing, a: int) -> int | None:
    """Least ``x`` with ``xax = x``, ``ax = xa`` and ``a - ax`` quasinilpotent."""
    a = int(a)
    T, A, M = _tables(R)
    neg = T.negation_table()
    QN = quasinilpotents(R).mask
    x = np.arange(R.size)
    ax = M[a]
    ok = (M[M[x, a], x] == x) & (ax == M[:, a]) & QN[A[a, neg[ax]]]
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else None


def gs_drazin_mask(R: FiniteRing) -> np.ndarray:
    """Which elements are gs-Drazin invertible."""

    def build():
        T, A, M = _tables(R)
        neg = T.negation_table()
        QN = quasinilpotents(R).mask
        idx = np.arange(R.size)
        out = np.empty(R.size, dtype=bool)
        for rows in _blocks(R.size):
            a = idx[rows][:, None]
            ax = M[a, idx[None, :]]
            ok = (M[M[idx[None, :], a], idx[None, :]] == idx[None, :]) & (ax == M[idx[None, :], a]) & QN[A[a, neg[ax]]]
            out[rows] = ok.any(axis=1)
        return out

    return R.memo("gs_drazin", build)


def geometric_sum_check(R: FiniteRing, a: int, nmax: int = 6) -> list[dict]:
    """For ``f_n = 1 + a + ... + a^n``: ``f_n`` should be a unit for even ``n`` and
    quasinilpotent for odd ``n``. Returns one verdict per ``n`` in ``1..nmax``."""
    if not is_uq(R):
        raise PreconditionFailed(f"{R.label} is not a UQ ring")
    a = int(a)
    U, QN = units(R).mask, quasinilpotents(R).mask
    if not U[a]:
        raise PreconditionFailed(f"{R.describe(a)} is not a unit of {R.label}")
    out = []
    f, power = R.one, R.one
    for n in range(1, nmax + 1):
        power = R.mul(power, a)
        f = R.add(f, power)
        expected = "unit" if n % 2 == 0 else "quasinilpotent"
        holds = bool(U[f]) if n % 2 == 0 else bool(QN[f])
        out.append({"n": n, "value": int(f), "expected": expected, "holds": holds})
    return out
