from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from finring.constructions import (
    a_ring,
    b_ring,
    brute_force_isomorphic,
    c_ring,
    corner,
    cyclic,
    dihedral,
    display_template,
    formal_triangular,
    group_product,
    group_ring,
    ideal_generated,
    induced_bimodule,
    is_2_group,
    is_good_subring,
    is_ideal,
    lemma51_iso,
    matrix_ring,
    poly_quotient,
    product,
    quaternion8,
    quotient_ring,
    regular_bimodule,
    ring_fingerprint,
    s_ring,
    t_ring,
    trivial_extension,
    u_ring,
    upper_triangular,
    zmod,
)
from finring.constructions import subrings
from finring.errors import NotAnIdeal, NotIdempotent, SizeCapExceeded, VerificationFailed, ZeroIdempotent
from finring.kernel import Subset, materialize

F2, Z4 = zmod(2), zmod(4)


@pytest.mark.parametrize(
    "make, size, label",
    [
        (lambda: zmod(2), 2, "F2"),
        (lambda: zmod(9), 9, "Zmod(9)"),
        (lambda: matrix_ring(2, F2), 16, "M(2, F2)"),
        (lambda: upper_triangular(3, F2), 64, "T(3, F2)"),
        (lambda: poly_quotient(Z4, 3), 64, "polyq(Zmod(4), 3)"),
        (lambda: group_ring(F2, cyclic(3)), 8, "groupring(F2, C(3))"),
        (lambda: group_ring(F2, group_product(cyclic(2), cyclic(2))), 16, "groupring(F2, prod(C(2), C(2)))"),
        (lambda: product(F2, Z4), 8, "product(F2, Zmod(4))"),
        (lambda: trivial_extension(Z4), 16, "trivext(Zmod(4))"),
        (lambda: formal_triangular(F2, F2, regular_bimodule(F2)), 8, "FT(F2, F2; F2)"),
        (lambda: a_ring(2, 3, F2), 16, "A(2, 3, F2)"),
        (lambda: b_ring(2, 3, F2), 64, "B(2, 3, F2)"),
        (lambda: c_ring(4, F2), 64, "C(4, F2)"),
        (lambda: t_ring(3, 2, F2), 16, "Tnm(3, 2, F2)"),
        (lambda: s_ring(2, 2, F2), 16, "S(2, 2, F2)"),
        (lambda: u_ring(3, F2), 16, "U(3, F2)"),
    ],
)
def test_sizes_and_labels(make, size, label):
    R = make()
    assert (R.size, R.label) == (size, label)


def test_zmod_one_rejected():
    with pytest.raises(ValueError):
        zmod(1)


def test_structure_cap_enforced():
    with pytest.raises(SizeCapExceeded):
        upper_triangular(3, zmod(6), cap=10_000)


def test_groups():
    assert [G.size for G in (cyclic(5), dihedral(4), quaternion8())] == [5, 8, 8]
    assert not dihedral(4).is_abelian and not quaternion8().is_abelian
    assert is_2_group(quaternion8()) and not is_2_group(cyclic(6))
    Q = quaternion8()
    assert sorted(Q.element_order(g) for g in range(8)) == [1, 2, 4, 4, 4, 4, 4, 4]
    D = dihedral(4)
    assert sorted(D.element_order(g) for g in range(8)) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_matrix_ring_product_is_matrix_product():
    R = matrix_ring(2, Z4)
    A = np.array([[1, 2], [3, 0]])
    B = np.array([[2, 1], [1, 3]])
    prod = R.mul(R.from_matrix(A), R.from_matrix(B))
    assert (R.to_matrix(prod) == (A @ B) % 4).all()


def test_from_matrix_rejects_pattern_violation():
    T = upper_triangular(2, F2)
    with pytest.raises(VerificationFailed):
        T.from_matrix([[1, 0], [1, 1]])


@pytest.mark.parametrize("base, G", [(F2, quaternion8()), (Z4, cyclic(3)), (F2, dihedral(4)), (Z4, group_product(cyclic(2), cyclic(2)))])
def test_group_ring_matches_convolution(base, G):
    RG = group_ring(base, G)
    ba, bm, bz, _ = oracles.tables(base)
    op = G.op.tolist()
    rng = np.random.default_rng(1234)
    a, b = rng.integers(0, RG.size, 1000), rng.integers(0, RG.size, 1000)
    got = RG.decode(RG.mul_many(a, b))
    xa, xb = RG.decode(a), RG.decode(b)
    for k in range(1000):
        want = oracles.convolution(ba, bm, bz, op, xa[k].tolist(), xb[k].tolist())
        assert got[k].tolist() == want


def test_product_ring_is_componentwise():
    P = product(F2, Z4)
    x, y = P.encode([1, 3]), P.encode([1, 2])
    assert P.decode(P.mul(x, y)).tolist() == [1, 2]
    assert P.decode(P.add(x, y)).tolist() == [0, 1]


def test_trivial_extension_multiplication():
    T = trivial_extension(Z4)
    x, y = T.encode(1, 2), T.encode(3, 1)
    r, m = T.decode(T.mul(x, y))
    # (1, 2)(3, 1) = (3, 1*1 + 2*3) = (3, 7 mod 4)
    assert (int(r), int(m)) == (3, 3)


def test_formal_triangular_over_induced_bimodule():
    N = induced_bimodule(F2, Z4, F2, np.arange(4) % 2, np.arange(2))
    R = formal_triangular(Z4, F2, N)
    assert R.size == 16
    x = R.encode(3, 1, 1)
    assert R.decode(R.mul(x, x)) == (1, 0, 1)  # 3*1 + 1*1 = 0 mod 2


def test_corner_rings_of_m2():
    M = matrix_ring(2, F2)
    e11 = M.from_matrix([[1, 0], [0, 0]])
    C, E = corner(M, e11)
    assert C.size == 2 and not E.unital and E(C.one) == e11
    with pytest.raises(NotIdempotent):
        corner(M, M.from_matrix([[0, 1], [0, 0]]))
    with pytest.raises(ZeroIdempotent):
        corner(M, M.zero)
    assert corner(M, M.one)[0].size == 16


def test_ideals_and_quotients():
    Z8 = zmod(8)
    I = ideal_generated(Z8, [2])
    assert I.indices().tolist() == [0, 2, 4, 6] and is_ideal(Z8, I)
    Q = quotient_ring(Z8, ideal_generated(Z8, [4]))
    assert Q.size == 4 and Q.label == "quot(Zmod(8), ideal(4))"
    assert brute_force_isomorphic(Q, Z4) is not None
    with pytest.raises(NotAnIdeal):
        quotient_ring(Z8, Subset.from_indices(Z8, [0, 3]))


def test_two_sided_ideal_in_matrix_ring_is_everything():
    M = matrix_ring(2, F2)
    assert len(ideal_generated(M, [M.from_matrix([[1, 0], [0, 0]])])) == 16


def test_canonical_embeddings_are_good():
    RG = group_ring(F2, quaternion8())
    assert is_good_subring(subrings.constant_embedding(F2, RG))
    assert is_good_subring(subrings.cyclic_subgroup_embedding(RG, 1))
    assert is_good_subring(subrings.base_into_trivial_extension(trivial_extension(Z4)))
    assert is_good_subring(subrings.diagonal_embedding(Z4, upper_triangular(2, Z4)))
    assert is_good_subring(subrings.banded_embedding(poly_quotient(F2, 3), upper_triangular(3, F2)))


def test_embedding_rejects_non_homomorphism():
    Z4r = zmod(4)
    with pytest.raises(VerificationFailed):
        subrings.RingEmbedding(zmod(2), Z4r, np.array([0, 1]))


@pytest.mark.parametrize("kind, n, m", [("A->T", 2, 2), ("A->T", 2, 3), ("A->T", 3, 2), ("B->S", 2, 2), ("B->S", 2, 3),
                                        ("B->S", 3, 2), ("C->U", 3, None), ("C->U", 4, None)])
def test_explicit_isomorphisms_verify_exhaustively(kind, n, m):
    res = lemma51_iso(kind, n, m, F2)
    assert res.mode == "exhaustive" and res.pairs == res.domain.size ** 2
    assert np.unique(res.map).size == res.domain.size == res.codomain.size


def test_b_maps_into_s_with_swapped_indices():
    # B(2, 3) and S(2, 3) differ; B(2, 3) matches S(3, 2)
    assert ring_fingerprint(b_ring(2, 3, F2)) != ring_fingerprint(s_ring(2, 3, F2))
    assert lemma51_iso("B->S", 2, 3, F2).codomain.label == "S(3, 2, F2)"


def test_display_templates_for_small_cases():
    assert display_template("A->T", 2, 2).tolist() == [[0, 1, -1, -1], [-1, 0, -1, -1], [-1, -1, 0, 2], [-1, -1, -1, 0]]
    assert display_template("C->U", 3).tolist() == [[0, 1, 3], [-1, 0, 2], [-1, -1, 0]]


def test_brute_force_isomorphism():
    f = brute_force_isomorphic(trivial_extension(F2), poly_quotient(F2, 2))
    assert f is not None
    assert brute_force_isomorphic(Z4, product(F2, F2)) is None
    assert brute_force_isomorphic(matrix_ring(2, F2), group_ring(F2, cyclic(4))) is None
    with pytest.raises(SizeCapExceeded):
        brute_force_isomorphic(poly_quotient(F2, 5), poly_quotient(F2, 5))


@given(st.integers(2, 12), st.integers(2, 12))
def test_product_fingerprint_is_symmetric(n, m):
    assert ring_fingerprint(product(zmod(n), zmod(m))) == ring_fingerprint(product(zmod(m), zmod(n)))


@given(st.sampled_from(["T", "polyq", "trivext"]), st.data())
def test_structured_ops_match_materialized_tables(kind, data):
    R = {"T": lambda: upper_triangular(2, Z4), "polyq": lambda: poly_quotient(Z4, 2), "trivext": lambda: trivial_extension(Z4)}[kind]()
    T = materialize(R)
    a = data.draw(st.integers(0, R.size - 1))
    b = data.draw(st.integers(0, R.size - 1))
    assert int(R.mul_many(a, b)) == T.mul(a, b) and int(R.add_many(a, b)) == T.add(a, b)
