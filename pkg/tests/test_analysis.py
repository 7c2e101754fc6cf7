from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from finring import analysis as an
from finring.cli import build
from finring.constructions import cyclic, group_ring, matrix_ring, product, upper_triangular, zmod
from finring.errors import NotAGroupRing, PreconditionFailed
from finring.kernel import Subset

F2 = zmod(2)


def members(S):
    return S.indices().tolist()


def test_small_subsets_of_z8():
    Z8 = zmod(8)
    assert members(an.units(Z8)) == [1, 3, 5, 7]
    assert members(an.idempotents(Z8)) == [0, 1]
    assert members(an.nilpotents(Z8)) == [0, 2, 4, 6]
    assert members(an.jacobson_radical(Z8)) == [0, 2, 4, 6]
    assert members(an.quasinilpotents(Z8)) == [0, 2, 4, 6]
    assert members(an.lower_nilradical(Z8)) == [0, 2, 4, 6]


def test_trivial_ring_facts():
    assert members(an.units(F2)) == [1] and members(an.quasinilpotents(F2)) == [0]
    FF = product(F2, F2)
    assert len(an.idempotents(FF)) == 4 and members(an.nilpotents(FF)) == [0]
    assert an.classify(FF).is_boolean


def test_m2f2_subsets():
    M = matrix_ring(2, F2)
    A = M.from_matrix([[1, 1], [1, 1]])
    e12 = M.from_matrix([[0, 1], [0, 0]])
    assert len(an.units(M)) == 6 and len(an.idempotents(M)) == 8
    assert members(an.jacobson_radical(M)) == [M.zero]
    assert A in an.quasinilpotents(M) and A not in an.jacobson_radical(M)
    assert e12 in an.nilpotents(M)
    assert members(an.lower_nilradical(M)) == [M.zero]
    assert not an.is_uq(M)


def test_t2f2_radical_and_2_primal():
    T = upper_triangular(2, F2)
    J = an.jacobson_radical(T)
    assert len(J) == 2 and J == an.nilpotents(T)
    assert an.is_2primal(T)


# Frozen from the naive oracles in ``oracles.py`` (all-pairs definition sweeps).
FROZEN = {
    "Zmod(12)": dict(U=4, Id=4, N=2, J=2, QN=2, Z=12, uq=False),
    "M(2, F2)": dict(U=6, Id=8, N=4, J=1, QN=4, Z=2, uq=False),
    "groupring(F2, C(4))": dict(U=8, Id=2, N=8, J=8, QN=8, Z=16, uq=True),
    "groupring(F2, C(3))": dict(U=3, Id=4, N=1, J=1, QN=1, Z=8, uq=False),
    "T(2, Zmod(4))": dict(U=16, Id=10, N=16, J=16, QN=16, Z=4, uq=True),
    "C(3, F2)": dict(U=8, Id=2, N=8, J=8, QN=8, Z=4, uq=True),
    "quot(Zmod(8), ideal(4))": dict(U=2, Id=2, N=2, J=2, QN=2, Z=4, uq=True),
}


@pytest.mark.parametrize("expr", sorted(FROZEN))
def test_frozen_subset_sizes(expr):
    P = an.classify(build(expr))
    want = FROZEN[expr]
    got = dict(U=len(P.units), Id=len(P.idempotents), N=len(P.nilpotents), J=len(P.jacobson),
               QN=len(P.quasinilpotents), Z=len(P.center), uq=P.is_uq)
    assert got == want


def test_oracle_equivalence_on_small_corpus(corpus):
    small = [R for R in corpus if R.size <= 64]
    assert len(small) >= 40
    for R in small:
        add, mul, zero, one = oracles.tables(R)
        assert oracles.as_set(an.units(R)) == oracles.naive_units(add, mul, zero, one), R.label
        assert oracles.as_set(an.jacobson_radical(R)) == oracles.naive_jacobson(add, mul, zero, one), R.label
        assert oracles.as_set(an.quasinilpotents(R)) == oracles.naive_quasinilpotents(add, mul, zero, one), R.label
        assert oracles.as_set(an.nilpotents(R)) == oracles.naive_nilpotents(mul, zero), R.label
        assert an.is_uq(R) == oracles.naive_is_uq(add, mul, zero, one), R.label


def test_profile_invariants_on_corpus(corpus):
    for R in corpus:
        P = an.classify(R)
        assert P.units.isdisjoint(P.jacobson), R.label
        assert P.jacobson <= P.quasinilpotents and P.nilpotents <= P.quasinilpotents, R.label
        assert P.quasinilpotents.isdisjoint(P.units), R.label
        nonzero_id = P.idempotents - Subset.from_indices(R, [R.zero])
        assert P.quasinilpotents.isdisjoint(nonzero_id), R.label
        assert P.is_dedekind_finite, R.label
        inv = P.inverses[P.units.indices()]
        assert (R.mul_many(P.units.indices(), inv) == R.one).all(), R.label


def test_augmentation_ideal():
    RG = group_ring(F2, cyclic(2))
    assert members(an.augmentation_ideal(RG)) == [0, 3]
    Z4C2 = group_ring(zmod(4), cyclic(2))
    delta = an.augmentation_ideal(Z4C2)
    assert len(delta) == 4 and delta <= an.jacobson_radical(Z4C2)
    with pytest.raises(NotAGroupRing):
        an.augmentation_ideal(zmod(4))


def test_radical_quotient_of_t2f2_is_boolean():
    Q = an.radical_quotient(upper_triangular(2, F2))
    assert Q.size == 4 and an.classify(Q).is_boolean


def test_classifier_examples():
    assert an.classify(zmod(8)).is_uq and not an.classify(zmod(6)).is_uq
    assert an.classify(group_ring(F2, cyclic(4))).is_uq
    P = an.classify(zmod(8))
    assert P.is_local and P.is_uniquely_clean and not P.is_regular
    P7 = an.classify(zmod(7))
    assert P7.is_division and P7.is_regular and P7.is_semisimple and not P7.is_uq


def test_element_predicates():
    Z8 = zmod(8)
    p = an.element_predicates(Z8, 6)
    assert p.quasi_nil_clean and p.witnesses["quasi_nil_clean"] == 0
    one = an.element_predicates(Z8, 1)
    assert one.clean and one.witnesses["clean"] == 0
    z6 = an.element_predicates(zmod(6), 3)
    assert z6.clean and z6.witnesses["clean"] == 4


def test_gs_drazin():
    Z8 = zmod(8)
    assert an.gs_drazin_inverse(Z8, 6) == 0
    assert an.gs_drazin_inverse(Z8, 1) == 1
    sqnc = an.clean_masks(Z8)["strongly_quasi_nil_clean"]
    assert (an.gs_drazin_mask(Z8) == sqnc).all()


def test_geometric_sums():
    Z8 = zmod(8)
    rows = an.geometric_sum_check(Z8, 3)
    assert rows[0] == {"n": 1, "value": 4, "expected": "quasinilpotent", "holds": True}
    assert rows[1]["value"] == 5 and all(r["holds"] for r in rows)
    assert an.geometric_sum_check(Z8, 1)[1]["value"] == 3
    with pytest.raises(PreconditionFailed):
        an.geometric_sum_check(zmod(6), 1)
    with pytest.raises(PreconditionFailed):
        an.geometric_sum_check(Z8, 2)


@given(st.integers(2, 64))
def test_zmod_uq_iff_power_of_two(n):
    assert an.is_uq(zmod(n)) == (n & (n - 1) == 0)


@given(st.integers(2, 40), st.integers(2, 12))
def test_product_law(n, m):
    P = product(zmod(n), zmod(m))
    coords = P.decode(np.arange(P.size))
    want = an.quasinilpotents(zmod(n)).mask[coords[:, 0]] & an.quasinilpotents(zmod(m)).mask[coords[:, 1]]
    assert (an.quasinilpotents(P).mask == want).all()
    assert an.is_uq(P) == (an.is_uq(zmod(n)) and an.is_uq(zmod(m)))


@given(st.integers(2, 64))
def test_uq_uj_uu_coincide_on_zn(n):
    R = zmod(n)
    assert an.is_uq(R) == an.is_uj(R) == an.is_uu(R)
