from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from finring.constructions import zmod
from finring.errors import AxiomViolation, RingMismatch, SizeCapExceeded, ZeroRing
from finring.kernel import Subset, TableRing, center, commutant, make_ring, materialize, table_cap, table_cap_override, verify_axioms


def _zn_tables(n):
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n, (i[:, None] * i[None, :]) % n


def test_make_ring_accepts_zn():
    add, mul = _zn_tables(6)
    R = make_ring(6, add, mul, 0, 1, "z6")
    assert R.size == 6 and R.mul(2, 3) == 0 and R.add(5, 4) == 3
    assert R.axiom_report["mode"] == "exhaustive"


def test_make_ring_rejects_zero_ring():
    with pytest.raises(ZeroRing):
        make_ring(1, [[0]], [[0]], 0, 0)


def test_make_ring_rejects_non_distributive_table():
    add, mul = _zn_tables(4)
    mul = mul.copy()
    mul[2, 3] = 1
    with pytest.raises(AxiomViolation) as exc:
        make_ring(4, add, mul, 0, 1)
    assert exc.value.witness


def test_make_ring_rejects_wrong_identity():
    add, mul = _zn_tables(5)
    with pytest.raises(AxiomViolation, match="identity"):
        make_ring(5, add, mul, 0, 2)


def test_make_ring_rejects_out_of_range_entry():
    add, mul = _zn_tables(3)
    add = add.copy()
    add[1, 1] = 7
    with pytest.raises(AxiomViolation, match="closure"):
        make_ring(3, add, mul, 0, 1)


def test_sampled_axiom_check_above_cap():
    R = zmod(300)
    report = verify_axioms(R, cap=256)
    assert report["mode"] == "sampled" and report["seed"] == 0


def test_materialize_respects_cap_override():
    from finring.constructions import upper_triangular

    T = upper_triangular(2, zmod(4))
    assert table_cap() == 4096
    with table_cap_override(10):
        assert table_cap() == 10
        with pytest.raises(SizeCapExceeded):
            materialize(T)
    assert materialize(T).size == 64


def test_materialized_table_matches_structured_ops():
    from finring.constructions import matrix_ring

    R = matrix_ring(2, zmod(2))
    T = materialize(R)
    assert isinstance(T, TableRing)
    rng = np.random.default_rng(0)
    a, b = rng.integers(0, 16, 50), rng.integers(0, 16, 50)
    assert (T.mul_many(a, b) == R.mul_many(a, b)).all()
    assert (T.add_many(a, b) == R.add_many(a, b)).all()


def test_element_arithmetic():
    R = zmod(8)
    x = R(3)
    assert int(x * x) == 1 and int(x + 5) == 0 and int(-x) == 5 and int(x ** 3) == 3 and int(2 - x) == 7


def test_element_from_other_ring_rejected():
    with pytest.raises(RingMismatch):
        zmod(4)(1) + zmod(5)(1)


def test_subset_algebra():
    R = zmod(6)
    evens = Subset.from_indices(R, [0, 2, 4])
    mult3 = Subset.from_indices(R, [0, 3])
    assert (evens & mult3).indices().tolist() == [0]
    assert len(evens | mult3) == 4
    assert (evens - mult3).indices().tolist() == [2, 4]
    assert len(~evens) == 3
    assert Subset.from_indices(R, [2]) <= evens and evens >= Subset.from_indices(R, [4])
    assert evens.translate(1).indices().tolist() == [1, 3, 5]
    assert not evens.isdisjoint(mult3)
    assert 4 in evens and 5 not in evens


def test_center_and_commutant_of_matrix_ring():
    from finring.constructions import matrix_ring

    R = matrix_ring(2, zmod(2))
    assert len(center(R)) == 2
    e11 = R.from_matrix([[1, 0], [0, 0]])
    # diagonal matrices commute with e11
    assert len(commutant(R, e11)) == 4


@given(st.integers(2, 40), st.data())
def test_zn_axioms_hold_on_random_triples(n, data):
    R = zmod(n)
    a, b, c = (data.draw(st.integers(0, n - 1)) for _ in range(3))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.add(a, R.neg(a)) == R.zero
    assert R.mul(R.one, a) == a == R.mul(a, R.one)
