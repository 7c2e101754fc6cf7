"""Executable versions of the UQ-ring statements, one ``Claim`` per statement.

A claim's ``check`` receives a :class:`Context` and returns an
:class:`Outcome`. Checks never raise for mathematical failures: they
return ``fail`` (or ``flagged`` at documented discrepancy sites) with a
witness naming the offending elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .. import analysis as an
from ..constructions import iso, subrings
from ..constructions.rings import Origin, upper_triangular
from ..constructions.section5 import s_ring
from ..errors import UnknownClaim
from ..kernel import FiniteRing, Subset, materialize

__all__ = ["Claim", "Context", "Outcome", "REGISTRY", "get_claim", "explain", "COST_CAPS"]

# Largest ring each cost class is run on; above it the cell is skipped.
COST_CAPS = {"cheap": 4096, "quadratic": 4096, "cubic": 1024}
# Per-ring limits on how many idempotents / ideals / cyclic subgroups are examined.
MAX_CORNERS = 64
MAX_IDEALS = 8
MAX_SUBGROUPS = 16


@dataclass(frozen=True)
class Outcome:
    status: str
    witness: dict | None = None
    detail: str | None = None


def ok(detail: str | None = None) -> Outcome:
    return Outcome("pass", None, detail)


def fail(witness: dict, detail: str) -> Outcome:
    return Outcome("fail", witness, detail)


def flagged(witness: dict | None, detail: str) -> Outcome:
    return Outcome("flagged", witness, detail)


def inapplicable(detail: str) -> Outcome:
    return Outcome("inapplicable", None, detail)


@dataclass
class Context:
    """What a check sees: the ring, its profile and run options."""

    ring: FiniteRing
    profile: an.RingProfile
    literal: bool = False
    seed: int = 0
    nstar_cap: int = an.NSTAR_CAP
    build: Callable[[str, Callable[[], FiniteRing]], FiniteRing] = field(default=lambda label, make: make(), repr=False)

    @property
    def origin(self) -> Origin | None:
        o = self.ring.origin
        return o if isinstance(o, Origin) else None

    @property
    def kind(self) -> str | None:
        return self.origin.kind if self.origin else None

    def witness(self, **elements: int) -> dict:
        """Witness record: element indices plus their printed values."""
        R = self.ring
        return {
            "elements": {k: int(v) for k, v in elements.items()},
            "values": {k: R.describe(int(v)) for k, v in elements.items()},
        }


@dataclass(frozen=True)
class Claim:
    id: str
    ref: str
    statement: str
    applicability: str
    cost_class: str
    check: Callable[[Context], Outcome] = field(repr=False, compare=False)


def _first(mask: np.ndarray) -> int:
    return int(np.flatnonzero(mask)[0])


def _tables(R: FiniteRing):
    T = materialize(R)
    return T, T.add_table.astype(np.int64), T.mul_table.astype(np.int64)


def _mismatch(ctx: Context, got: Subset, want: Subset, name: str) -> Outcome | None:
    diff = got.mask != want.mask
    if diff.any():
        a = _first(diff)
        side = "missing from" if want.mask[a] else "unexpected in"
        return fail(ctx.witness(a=a), f"element {side} {name}")
    return None


def _values_agree(values: dict[str, bool]) -> Outcome:
    if len(set(values.values())) == 1:
        return ok(", ".join(f"{k}={v}" for k, v in values.items()))
    return fail({"values": {k: bool(v) for k, v in values.items()}}, "equivalent conditions disagree")


# -- C01-C08: subsets, products, corners, subrings, structured rings ------------

def c01(ctx: Context) -> Outcome:
    P = ctx.profile
    for name, S in (("N", P.nilpotents), ("J", P.jacobson)):
        bad = S.mask & ~P.quasinilpotents.mask
        if bad.any():
            return fail(ctx.witness(a=_first(bad)), f"element of {name} outside QN")
    return ok()


def c02(ctx: Context) -> Outcome:
    P = ctx.profile
    qn = P.quasinilpotents.mask
    both = qn & P.units.mask
    if both.any():
        return fail(ctx.witness(a=_first(both)), "element of QN is a unit")
    nonzero_id = P.idempotents.mask.copy()
    nonzero_id[ctx.ring.zero] = False
    bad = qn & nonzero_id
    if bad.any():
        return fail(ctx.witness(e=_first(bad)), "nonzero idempotent in QN")
    if ctx.literal:
        hits = np.flatnonzero(qn & P.idempotents.mask)
        return flagged(ctx.witness(e=int(hits[0])),
                       "literal form fails only at the zero idempotent: 0 lies in QN and in Id")
    return ok("checked with nonzero idempotents; run with literal=True for the literal form")


def c03(ctx: Context) -> Outcome:
    if ctx.kind != "product":
        return inapplicable("not a direct product")
    R = ctx.ring
    coords = R.decode(np.arange(R.size))
    P = ctx.profile
    for name, own, part in (
        ("QN", P.quasinilpotents, an.quasinilpotents),
        ("U", P.units, an.units),
        ("Id", P.idempotents, an.idempotents),
        ("N", P.nilpotents, an.nilpotents),
        ("J", P.jacobson, an.jacobson_radical),
    ):
        want = np.ones(R.size, dtype=bool)
        for i, C in enumerate(R.components):
            want &= part(C).mask[coords[:, i]]
        bad = _mismatch(ctx, own, Subset(R, want), f"the product of the component {name} sets")
        if bad:
            return bad
    return ok()


def c04(ctx: Context) -> Outcome:
    if ctx.kind != "product":
        return inapplicable("not a direct product")
    parts = {C.label: an.is_uq(C) for C in ctx.ring.components}
    whole = ctx.profile.is_uq
    if whole != all(parts.values()):
        return fail({"values": {"product": whole, **parts}}, "UQ of the product differs from UQ of all factors")
    return ok(f"is_uq={whole}")


def c05(ctx: Context) -> Outcome:
    R, P = ctx.ring, ctx.profile
    notes = []
    if ctx.kind == "corner":
        parent = ctx.origin.rings[0]
        if an.is_uq(parent) and not P.is_uq:
            return fail({"parent": parent.label}, "corner of a UQ ring is not UQ")
        notes.append(f"parent {parent.label} is_uq={an.is_uq(parent)}")
    ids = [e for e in P.idempotents if e != R.zero]
    checked = ids[:MAX_CORNERS]
    for e in checked:
        C, E = subrings.corner(R, e, verify=False)
        law = E.pullback(P.quasinilpotents)
        if law != an.quasinilpotents(C):
            a = _first(law.mask != an.quasinilpotents(C).mask)
            return fail(ctx.witness(e=e, a=int(E.map[a])), "QN(eRe) differs from QN(R) restricted to eRe")
        if P.is_uq and not an.is_uq(C):
            return fail(ctx.witness(e=e), "corner of a UQ ring is not UQ")
    notes.append(f"{len(checked)} of {len(ids)} nonzero idempotents")
    return ok("; ".join(notes))


def _embeddings(ctx: Context) -> list[subrings.RingEmbedding]:
    R, kind = ctx.ring, ctx.kind
    if kind == "groupring":
        G = R.origin.group
        out = [subrings.constant_embedding(R.base, R)]
        seen = set()
        for g in range(G.size):
            key = frozenset(G.powers(g))
            if g == G.identity or key in seen or len(seen) >= MAX_SUBGROUPS:
                continue
            seen.add(key)
            out.append(subrings.cyclic_subgroup_embedding(R, g))
        return out
    if kind == "trivext":
        return [subrings.base_into_trivial_extension(R)]
    if kind == "triangular":
        return [subrings.diagonal_embedding(R.base, R)]
    if kind in ("polyq", "A", "B", "C"):
        out = [subrings.constant_embedding(R.base, R)]
        if kind == "polyq":
            n, base = R.origin.n, R.base
            if n >= 2 and base.size ** (n * (n + 1) // 2) <= COST_CAPS["quadratic"]:
                label = f"T({n}, {base.label})"
                Tn = ctx.build(label, lambda: upper_triangular(n, base))
                out.append(subrings.banded_embedding(R, Tn))
        return out
    return []


def c06(ctx: Context) -> Outcome:
    embeddings = _embeddings(ctx)
    if not embeddings:
        return inapplicable("no registered good-subring embedding for this construction")
    for E in embeddings:
        name = f"{E.sub.label} -> {E.sup.label}"
        if not subrings.is_good_subring(E):
            sub_units, pulled = an.units(E.sub), E.pullback(an.units(E.sup))
            a = _first(sub_units.mask != pulled.mask)
            return fail({"embedding": name, "elements": {"s": a}}, "registered subring is not good")
        bad = E.pullback(an.quasinilpotents(E.sup)).mask & ~an.quasinilpotents(E.sub).mask
        if bad.any():
            return fail({"embedding": name, "elements": {"s": _first(bad)}}, "QN(R) meets S outside QN(S)")
        if an.is_uq(E.sup) and not an.is_uq(E.sub):
            return fail({"embedding": name}, "good subring of a UQ ring is not UQ")
    return ok(f"{len(embeddings)} embeddings")


def _structured_qn_shape(ctx: Context) -> tuple[np.ndarray, list[FiniteRing]] | None:
    """Mask of elements whose diagonal part is quasinilpotent, and the base rings."""
    R, kind = ctx.ring, ctx.kind
    idx = np.arange(R.size)
    if kind == "trivext":
        r, _ = R.decode(idx)
        return an.quasinilpotents(R.R).mask[r], [R.R]
    if kind == "formal_triangular":
        r, _, s = R.decode(idx)
        return an.quasinilpotents(R.R).mask[r] & an.quasinilpotents(R.S).mask[s], [R.R, R.S]
    if kind == "triangular":
        coords = R.decode(idx)
        qn = an.quasinilpotents(R.base).mask
        diag = [int(R.pattern[i, i]) for i in range(R.N)]
        return qn[coords[:, diag]].all(axis=1), [R.base]
    if kind == "polyq":
        return an.quasinilpotents(R.base).mask[R.decode(idx)[:, 0]], [R.base]
    return None


def c07(ctx: Context) -> Outcome:
    shape = _structured_qn_shape(ctx)
    if shape is None:
        return inapplicable("not a trivial extension, formal triangular, triangular or truncated polynomial ring")
    want, bases = shape
    qn = ctx.profile.quasinilpotents.mask
    bad = want & ~qn
    if bad.any():
        return fail(ctx.witness(a=_first(bad)), "element with quasinilpotent diagonal part is not in QN")
    if all(an.is_uq(B) for B in bases):
        extra = qn & ~want
        if extra.any():
            return fail(ctx.witness(a=_first(extra)), "QN element with a non-quasinilpotent diagonal part over UQ bases")
        return ok("inclusion and equality (UQ bases)")
    return ok("inclusion (bases not all UQ)")


def c08(ctx: Context) -> Outcome:
    shape = _structured_qn_shape(ctx)
    if shape is None:
        return inapplicable("not a trivial extension, formal triangular, triangular or truncated polynomial ring")
    bases = {B.label: an.is_uq(B) for B in shape[1]}
    if ctx.profile.is_uq != all(bases.values()):
        return fail({"values": {"ring": ctx.profile.is_uq, **bases}}, "UQ does not transfer")
    return ok(f"is_uq={ctx.profile.is_uq}")


# -- C09-C16: element laws in general and UQ rings -----------------------------

def c09(ctx: Context) -> Outcome:
    R, P = ctx.ring, ctx.profile
    _, A, M = _tables(R)
    qn = P.quasinilpotents.mask
    Q, Z = P.quasinilpotents.indices(), P.center.indices()
    prod = M[np.ix_(Q, Z)]
    if not qn[prod].all():
        i, j = np.argwhere(~qn[prod])[0]
        return fail(ctx.witness(a=Q[i], b=Z[j]), "ab not in QN for a in QN, b central")
    QZ = np.flatnonzero(qn & P.center.mask)
    sums = A[np.ix_(Q, QZ)]
    if not qn[sums].all():
        i, j = np.argwhere(~qn[sums])[0]
        return fail(ctx.witness(a=Q[i], b=QZ[j]), "a+b not in QN for a, b in QN, b central")
    if ctx.kind == "matrix" and ctx.origin.n == 2:
        base = R.base
        e12 = R.from_matrix([[base.zero, base.one], [base.zero, base.zero]])
        e21 = R.from_matrix([[base.zero, base.zero], [base.one, base.zero]])
        ab, s = R.mul(e12, e21), R.add(e12, e21)
        if not (qn[e12] and qn[e21] and not qn[ab] and not qn[s]):
            return fail(ctx.witness(a=e12, b=e21), "non-central counterexample does not behave as stated")
        return ok("central closure; e12, e21 in QN while e12 e21 and e12 + e21 are not")
    return ok()


def c10(ctx: Context) -> Outcome:
    R, P = ctx.ring, ctx.profile
    _, A, _ = _tables(R)
    U = P.units.indices()
    UZ = np.flatnonzero(P.units.mask & P.center.mask)
    sums = np.zeros(R.size, dtype=bool)
    sums[np.unique(A[np.ix_(U, UZ)])] = True
    qn = P.quasinilpotents.mask
    if (qn & ~sums).any():
        return flagged(ctx.witness(q=_first(qn & ~sums)), "QN is not contained in U + (U n Z)")
    equal = bool((sums == qn).all())
    if equal != P.is_uq:
        a = _first(sums != qn)
        return flagged(ctx.witness(a=a), f"U + (U n Z) = QN is {equal} while is_uq is {P.is_uq}")
    return ok(f"U + (U n Z) = QN is {equal}")


def c11(ctx: Context) -> Outcome:
    if ctx.kind != "matrix" or ctx.origin.n < 2:
        return inapplicable("not a matrix ring of size at least 2")
    R, P = ctx.ring, ctx.profile
    U = P.units.mask
    neg = R.negation_table()
    u_minus_one = R.add_many(np.arange(R.size), neg[R.one])
    both = U & U[u_minus_one]
    if P.is_uq or not both.any():
        return fail({"values": {"is_uq": P.is_uq}}, "matrix ring is UQ or has no unit u with u - 1 a unit")
    if ctx.origin.n == 2:
        b = R.base
        u = R.from_matrix([[b.zero, b.one], [b.one, b.one]])
        if not (U[u] and U[R.sub(R.one, u)]):
            return fail(ctx.witness(u=u), "[[0, 1], [1, 1]] or I - U is not a unit")
        return Outcome("pass", ctx.witness(u=u), "U = [[0, 1], [1, 1]] and I - U are units")
    return Outcome("pass", ctx.witness(u=_first(both)), "unit u with u - 1 a unit")


def _uq_only(ctx: Context) -> Outcome | None:
    return None if ctx.profile.is_uq else inapplicable("ring is not UQ")


def c12(ctx: Context) -> Outcome:
    if (skip := _uq_only(ctx)) is not None:
        return skip
    R, P = ctx.ring, ctx.profile
    _, A, M = _tables(R)
    om = A[R.one, R.negation_table()]
    qn = P.quasinilpotents.mask
    left, right = qn[om[M]], qn[om[M.T]]
    if (left != right).any():
        a, b = np.argwhere(left != right)[0]
        return fail(ctx.witness(a=a, b=b), "1 - ab and 1 - ba differ in QN membership")
    return ok()


def _no_unit_pair(R: FiniteRing) -> int | None:
    U = an.units(R).mask
    T, A, _ = _tables(R)
    om = A[R.one, T.negation_table()]
    bad = U & U[om]
    return _first(bad) if bad.any() else None


def c13(ctx: Context) -> Outcome:
    if (skip := _uq_only(ctx)) is not None:
        return skip
    u = _no_unit_pair(ctx.ring)
    if u is not None:
        return fail(ctx.witness(u1=u, u2=ctx.ring.sub(ctx.ring.one, u)), "two units sum to 1")
    Q = an.radical_quotient(ctx.ring)
    u = _no_unit_pair(Q)
    if u is not None:
        reps = Q.origin.extra.representatives
        return fail(ctx.witness(u1=reps[u], u2=reps[Q.sub(Q.one, u)]), "two units of R/J sum to 1")
    return ok("in R and in R/J")


def c14(ctx: Context) -> Outcome:
    if (skip := _uq_only(ctx)) is not None:
        return skip
    R, P = ctx.ring, ctx.profile
    _, A, M = _tables(R)
    qn = P.quasinilpotents.mask
    two = R.from_int(2)
    if not qn[two] or not P.jacobson.mask[two]:
        return fail(ctx.witness(two=two), "2 is not in QN and J")
    idx = np.arange(R.size)
    sq = qn[M[idx, idx]]
    if (sq != qn).any():
        return fail(ctx.witness(x=_first(sq != qn)), "x in QN and x^2 in QN disagree")
    Q = P.quasinilpotents.indices()
    add_closed = bool(qn[A[np.ix_(Q, Q)]].all())
    mul_closed = bool(qn[M[np.ix_(Q, Q)]].all())
    if add_closed != (add_closed and mul_closed):
        return fail({"values": {"add_closed": add_closed, "mul_closed": mul_closed}}, "QN additively closed but not a subring")
    return ok(f"QN additively closed: {add_closed}")


def c15(ctx: Context) -> Outcome:
    if ctx.kind != "zmod":
        return inapplicable("not Z/n")
    n = ctx.origin.n
    power = n & (n - 1) == 0
    if ctx.profile.is_uq != power:
        return fail({"values": {"n": n, "is_uq": ctx.profile.is_uq}}, "UQ differs from n being a power of 2")
    return ok(f"n={n}, is_uq={power}")


def c16(ctx: Context) -> Outcome:
    P = ctx.profile
    if not (P.is_uq or P.is_local):
        return inapplicable("ring is neither UQ nor local")
    notes = []
    if P.is_local and P.is_uq != P.is_uniquely_clean:
        return fail({"values": {"is_uq": P.is_uq, "is_uniquely_clean": P.is_uniquely_clean}},
                    "local ring: UQ and uniquely clean disagree")
    if P.is_uq:
        if P.is_division and ctx.ring.size != 2:
            return fail({"values": {"size": ctx.ring.size}}, "UQ division ring is not F2")
        if P.is_local:
            q = an.radical_quotient(ctx.ring).size
            if q != 2:
                return fail({"values": {"size_R/J": q}}, "UQ local ring with R/J not F2")
            notes.append("|R/J| = 2")
        if P.is_semisimple and not P.is_boolean:
            return fail({}, "UQ semisimple ring is not a product of copies of F2")
    return ok("; ".join(notes) or None)


# -- C17-C24: equivalences through R/J -----------------------------------------

def _quotient_profile(ctx: Context) -> an.RingProfile:
    return an.classify(an.radical_quotient(ctx.ring), ctx.nstar_cap)


def c17(ctx: Context) -> Outcome:
    P, Q = ctx.profile, _quotient_profile(ctx)
    qn_is_j = P.quasinilpotents == P.jacobson
    return _values_agree({
        "R/J UQ": Q.is_uq,
        "R/J Boolean": Q.is_boolean,
        "R UJ": P.is_uj,
        "R/J UU": Q.is_uu,
        "R UQ with QN = J": P.is_uq and qn_is_j,
    })


def c18(ctx: Context) -> Outcome:
    P = ctx.profile
    if not P.is_regular:
        return inapplicable("ring is not von Neumann regular")
    return _values_agree({"UQ": P.is_uq, "UJ": P.is_uj, "UU": P.is_uu, "Boolean": P.is_boolean})


def c19(ctx: Context) -> Outcome:
    if (skip := _uq_only(ctx)) is not None:
        return skip
    cm = an.clean_masks(ctx.ring)
    for a_name, b_name in (("clean", "quasi_nil_clean"), ("strongly_clean", "strongly_quasi_nil_clean")):
        diff = cm[a_name] != cm[b_name]
        if diff.any():
            return fail(ctx.witness(a=_first(diff)), f"{a_name} and {b_name} disagree")
    return ok()


def c20(ctx: Context) -> Outcome:
    R, P = ctx.ring, ctx.profile
    cm = an.clean_masks(R)
    every_clean_sqnc = bool((~cm["clean"] | cm["strongly_quasi_nil_clean"]).all())
    T, A, _ = _tables(R)
    neg = T.negation_table()
    qn = P.quasinilpotents.mask
    covered = np.zeros(R.size, dtype=bool)
    for e in np.flatnonzero(P.idempotents.mask & P.center.mask):
        covered |= qn[A[:, neg[e]]]
    units_split = bool((~P.units.mask | covered).all())
    return _values_agree({"UQ": P.is_uq, "clean => strongly quasi nil-clean": every_clean_sqnc,
                          "units = central idempotent + QN": units_split})


def c21(ctx: Context) -> Outcome:
    P = ctx.profile
    sqnc = P.is_strongly_quasi_nil_clean
    if sqnc and not P.is_uq:
        return fail({}, "strongly quasi nil-clean ring is not UQ")
    if sqnc and not P.is_strongly_clean:
        return fail({}, "strongly quasi nil-clean ring is not strongly clean")
    return _values_agree({"strongly quasi nil-clean": sqnc, "UQ and strongly clean": P.is_uq and P.is_strongly_clean})


def c22(ctx: Context) -> Outcome:
    P, Q = ctx.profile, _quotient_profile(ctx)
    return _values_agree({
        "R UQ": P.is_uq, "R/J UQ": Q.is_uq, "R/J Boolean": Q.is_boolean,
        "R UJ": P.is_uj, "R/J UJ": Q.is_uj, "R/J UU": Q.is_uu,
    })


def c23(ctx: Context) -> Outcome:
    P = ctx.profile
    return _values_agree({"UQ": P.is_uq, "UJ": P.is_uj, "UU": P.is_uu})


def c24(ctx: Context) -> Outcome:
    P = ctx.profile
    return _values_agree({"UQ (potent)": P.is_uq, "J-clean": P.is_j_clean})


# -- C25-C30: radical lifting and group rings -----------------------------------

def c25(ctx: Context) -> Outcome:
    R, P = ctx.ring, ctx.profile
    ideals = [P.jacobson]
    for a in P.jacobson.indices():
        if len(ideals) >= MAX_IDEALS:
            break
        I = subrings.ideal_generated(R, [int(a)])
        if all(I != J for J in ideals):
            ideals.append(I)
    for I in ideals:
        Q = subrings.quotient_ring(R, I, label=f"{R.label}/I")
        proj = Q.origin.extra.projection
        lifted = an.quasinilpotents(Q).mask[proj]
        bad = lifted & ~P.quasinilpotents.mask
        if bad.any():
            return fail(ctx.witness(q=_first(bad)), f"q + I in QN(R/I) but q not in QN(R) for |I|={len(I)}")
        if an.is_uq(Q) and not P.is_uq:
            return fail({"values": {"ideal_size": len(I)}}, "R/I is UQ with I in J but R is not")
    return ok(f"{len(ideals)} ideals inside J")


def c26(ctx: Context) -> Outcome:
    if (skip := _uq_only(ctx)) is not None:
        return skip
    R, P = ctx.ring, ctx.profile
    _, A, M = _tables(R)
    a = P.units.indices()
    f = np.full(a.size, R.one)
    power = np.full(a.size, R.one)
    for n in range(1, 7):
        power = M[power, a]
        f = A[f, power]
        target = P.units.mask if n % 2 == 0 else P.quasinilpotents.mask
        bad = ~target[f]
        if bad.any():
            i = _first(bad)
            return fail(ctx.witness(a=a[i], f=f[i]) | {"n": n}, "geometric sum has the wrong type")
    return ok(f"{a.size} units, n <= 6")


def _group_data(ctx: Context):
    from ..constructions.groups import is_2_group

    G = ctx.ring.origin.group
    return ctx.ring.base, G, is_2_group(G)


def c27(ctx: Context) -> Outcome:
    if ctx.kind != "groupring":
        return inapplicable("not a group ring")
    R, G, two = _group_data(ctx)
    uq = ctx.profile.is_uq
    if uq and not (an.is_uq(R) and two):
        return fail({"values": {"RG_uq": uq, "R_uq": an.is_uq(R), "G_2group": two}}, "UQ group ring with R not UQ or G not a 2-group")
    return ok(f"is_uq={uq}, G 2-group={two}")


def c28(ctx: Context) -> Outcome:
    if ctx.kind != "groupring":
        return inapplicable("not a group ring")
    R, G, two = _group_data(ctx)
    if not (an.is_uq(R) and two):
        return inapplicable("R not UQ or G not a 2-group")
    return ok() if ctx.profile.is_uq else fail({}, "RG is not UQ")


def c29(ctx: Context) -> Outcome:
    if ctx.kind != "groupring":
        return inapplicable("not a group ring")
    R, G, two = _group_data(ctx)
    if not (an.is_uj(R) and two):
        return inapplicable("R not UJ or G not a 2-group")
    return ok() if ctx.profile.is_uj else fail({}, "RG is not UJ")


def c30(ctx: Context) -> Outcome:
    if ctx.kind != "groupring":
        return inapplicable("not a group ring")
    R, G, two = _group_data(ctx)
    if not (an.is_uq(R) and two):
        return inapplicable("R not UQ or G not a 2-group")
    delta = an.augmentation_ideal(ctx.ring)
    bad = delta.mask & ~ctx.profile.jacobson.mask
    if bad.any():
        return fail(ctx.witness(f=_first(bad)), "augmentation element outside J")
    return ok(f"|Delta| = {len(delta)}")


# -- C31-C34: monomial algebras and gs-Drazin inverses ----------------------------

# Published matrix shapes for n = m = 2 (and C_4): entry k > 0 is parameter k, 0 is a fixed zero.
EXAMPLE_SHAPES = {
    ("A", 2, 2): [[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 3], [0, 0, 0, 1]],
    ("B", 2, 2): [[1, 2, 3], [0, 1, 4], [0, 0, 1]],
    ("C", 4, None): [[1, 2, 3, 4], [0, 1, 5, 6], [0, 0, 1, 2], [0, 0, 0, 1]],
}


def canonical_shape(pattern) -> list[list[int]]:
    """Renumber parameters 1, 2, ... by first appearance in row-major order; 0 marks a fixed zero."""
    pattern = np.asarray(pattern)
    names: dict[int, int] = {}
    out = []
    for row in pattern:
        line = []
        for p in row:
            p = int(p)
            if p < 0:
                line.append(0)
            else:
                line.append(names.setdefault(p, len(names) + 1))
        out.append(line)
    return out


def _shape_of_published(shape) -> list[list[int]]:
    return canonical_shape(np.asarray(shape) - 1)


_ISO_KIND = {"A": "A->T", "B": "B->S", "C": "C->U"}


def c31(ctx: Context) -> Outcome:
    if ctx.kind not in _ISO_KIND:
        return inapplicable("not one of the monomial algebras A, B, C")
    o = ctx.origin
    kind = _ISO_KIND[o.kind]
    result = iso.lemma51_iso(kind, o.n, o.m, ctx.ring.base)
    notes = [f"{result.domain.label} -> {result.codomain.label} verified ({result.mode}, {result.pairs} pairs)"]
    key = (o.kind, o.n, o.m)
    if key in EXAMPLE_SHAPES:
        want = _shape_of_published(EXAMPLE_SHAPES[key])
        got = canonical_shape(result.codomain.pattern)
        if got != want:
            return fail({"shape": got, "published": want}, "matrix model differs from the published shape")
        notes.append("matches the published matrix shape")
    if o.kind == "C":
        notes.append("codomain is U_n (the proof names S_{n,m})")
    if o.kind == "B" and o.n != o.m:
        literal = s_ring(o.n, o.m, ctx.ring.base)
        if iso.ring_fingerprint(literal) != iso.ring_fingerprint(result.domain):
            return flagged({"domain": result.domain.label, "literal_codomain": literal.label},
                           "; ".join(notes) + f"; {literal.label} has different invariants, so the index order is swapped")
    return ok("; ".join(notes))


def c32(ctx: Context) -> Outcome:
    if ctx.kind not in _ISO_KIND:
        return inapplicable("not one of the monomial algebras A, B, C")
    R = ctx.ring
    want = Subset(R, an.units(R.base).mask[R.decode(np.arange(R.size))[:, 0]])
    bad = _mismatch(ctx, ctx.profile.units, want, "the set with unit constant term")
    return bad or ok()


def c33(ctx: Context) -> Outcome:
    if ctx.kind not in _ISO_KIND:
        return inapplicable("not one of the monomial algebras A, B, C")
    base_uq = an.is_uq(ctx.ring.base)
    if ctx.profile.is_uq != base_uq:
        return fail({"values": {"ring": ctx.profile.is_uq, "base": base_uq}}, "UQ does not transfer")
    return ok(f"is_uq={base_uq}")


def c34(ctx: Context) -> Outcome:
    gs = an.gs_drazin_mask(ctx.ring)
    sqnc = an.clean_masks(ctx.ring)["strongly_quasi_nil_clean"]
    diff = gs != sqnc
    if diff.any():
        a = _first(diff)
        return fail(ctx.witness(a=a) | {"gs_drazin": bool(gs[a])}, "gs-Drazin invertibility and strong quasi nil-cleanness disagree")
    return ok(f"{int(gs.sum())} of {gs.size} elements gs-Drazin invertible")


def _claim(id, ref, statement, applicability, cost, check) -> Claim:
    return Claim(id, ref, statement, applicability, cost, check)


REGISTRY: dict[str, Claim] = {c.id: c for c in [
    _claim("C01", "Introduction, definition of quasinilpotent", "N(R) and J(R) are subsets of QN(R)", "always", "cheap", c01),
    _claim("C02", "Example 2.1(2)", "QN(R) n U(R) is empty and QN(R) n (Id(R) - {0}) is empty; the literal form with all of Id(R) is reported as flagged",
           "always", "cheap", c02),
    _claim("C03", "Lemma 2.4", "QN of a direct product is the product of the QN sets (likewise U, Id, N, J)", "direct products", "cheap", c03),
    _claim("C04", "Lemma 2.5", "a direct product is UQ iff every factor is UQ", "direct products", "cheap", c04),
    _claim("C05", "Lemma 2.8", "QN(eRe) = QN(R) n eRe for idempotents e != 0, and eRe is UQ whenever R is", "always (corners of each nonzero idempotent)", "cubic", c05),
    _claim("C06", "Lemmas 2.2 and 2.3", "for a good subring S of R: QN(R) n S is inside QN(S), and S is UQ when R is", "group rings, trivial extensions, triangular, truncated polynomial and monomial rings", "quadratic", c06),
    _claim("C07", "Lemma 2.11(1)-(4)", "elements whose diagonal part lies in QN of the base are in QN, with equality over UQ bases",
           "trivial extensions, formal triangular, triangular and truncated polynomial rings", "cheap", c07),
    _claim("C08", "Corollary 2.12(1)-(4)", "these constructions are UQ iff their base rings are UQ",
           "trivial extensions, formal triangular, triangular and truncated polynomial rings", "cheap", c08),
    _claim("C09", "Lemma 3.5", "a in QN, b central gives ab in QN; a, b in QN with b central gives a + b in QN; e12, e21 in M_2 show centrality is needed",
           "always", "quadratic", c09),
    _claim("C10", "Lemma 3.7", "R is UQ iff U(R) + (U(R) n Z(R)) = QN(R); counterexamples are flagged", "always", "quadratic", c10),
    _claim("C11", "Lemma 3.8", "M_n(S) is not UQ for n >= 2: some unit u has u - 1 a unit", "matrix rings with n >= 2", "cheap", c11),
    _claim("C12", "Corollary 3.11", "1 - ab in QN iff 1 - ba in QN", "UQ rings", "quadratic", c12),
    _claim("C13", "Lemma 3.12", "no two units sum to 1, in R and in R/J(R)", "UQ rings", "cheap", c13),
    _claim("C14", "Lemma 3.13", "2 is in QN and J; x in QN iff x^2 in QN; QN additively closed iff QN is a subring", "UQ rings", "quadratic", c14),
    _claim("C15", "Corollary 3.14", "Z/n is UQ iff n is a power of 2", "rings Z/n", "cheap", c15),
    _claim("C16", "Lemma 3.15", "UQ division rings are F2; UQ local rings have R/J = F2 and local rings are UQ iff uniquely clean; UQ semisimple rings are Boolean",
           "UQ rings and local rings", "cheap", c16),
    _claim("C17", "Theorem 3.16", "for semipotent R: R/J UQ, R/J Boolean, R UJ, R/J UU, and R UQ with QN = J are equivalent",
           "always (finite rings are semipotent)", "cheap", c17),
    _claim("C18", "Corollary 3.17", "a regular ring is UQ iff UJ iff UU iff Boolean", "von Neumann regular rings", "cheap", c18),
    _claim("C19", "Proposition 3.18", "in a UQ ring an element is clean iff quasi nil-clean, and strongly clean iff strongly quasi nil-clean", "UQ rings", "cheap", c19),
    _claim("C20", "Corollary 3.19", "UQ iff every clean element is strongly quasi nil-clean iff every unit is a central idempotent plus a QN element", "always", "cheap", c20),
    _claim("C21", "Corollaries 3.20, 3.22 and Lemma 3.21", "a ring is strongly quasi nil-clean iff it is UQ and strongly clean", "always", "cheap", c21),
    _claim("C22", "Corollary 3.24", "for potent R: R UQ, R/J UQ, R/J Boolean, R UJ, R/J UJ, R/J UU are equivalent", "always (finite rings are potent)", "cheap", c22),
    _claim("C23", "Example 3.25 and Corollary 3.26", "a finite ring is UQ iff UJ iff UU", "always", "cheap", c23),
    _claim("C24", "Corollary 3.27", "R is a potent UQ ring iff R is J-clean", "always (finite rings are potent)", "cheap", c24),
    _claim("C25", "Lemma 4.1 and Corollary 4.2", "for an ideal I inside J: lifts of QN(R/I) lie in QN(R), and R/I UQ gives R UQ", "always (I = J and principal ideals inside J)", "cubic", c25),
    _claim("C26", "Lemma 4.3", "for a unit a and f_n = 1 + a + ... + a^n: f_n is a unit for even n and quasinilpotent for odd n (n <= 6)", "UQ rings", "cheap", c26),
    _claim("C27", "Theorem 4.4", "if RG is UQ then R is UQ and G is a 2-group", "group rings", "cheap", c27),
    _claim("C28", "Proposition 4.6", "R UQ and G a finite 2-group give RG UQ", "group rings with R UQ and G a 2-group", "cheap", c28),
    _claim("C29", "Theorem 4.7", "R UJ and G a finite 2-group give RG UJ", "group rings with R UJ and G a 2-group", "cheap", c29),
    _claim("C30", "Lemma 4.5", "the augmentation ideal lies in J(RG) when R is UQ and G a 2-group", "group rings with R UQ and G a 2-group", "cheap", c30),
    _claim("C31", "Lemma 5.1 and Example 5.2", "A_{n,m} = T_{n,m}, B_{n,m} = S_{n,m}, C_n = U_n through the displayed coefficient maps", "rings A, B, C", "quadratic", c31),
    _claim("C32", "Corollary 5.3", "units of A, B, C are exactly the elements with a unit constant coefficient", "rings A, B, C", "cheap", c32),
    _claim("C33", "Lemma 5.4", "A, B, C over R are UQ iff R is UQ", "rings A, B, C", "cheap", c33),
    _claim("C34", "Introduction, gs-Drazin inverses", "a is gs-Drazin invertible iff a is strongly quasi nil-clean", "always", "quadratic", c34),
]}


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}") from None


def explain(claim_id: str) -> str:
    c = get_claim(claim_id)
    return (f"{c.id}: {c.ref}\n"
            f"  statement: {c.statement}\n"
            f"  applies to: {c.applicability}\n"
            f"  cost class: {c.cost_class}")
