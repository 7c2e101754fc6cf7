"""Ring and group constructions, embeddings, quotients and explicit isomorphisms."""

from .groups import FiniteGroup, cyclic, dihedral, group_product, is_2_group, quaternion8
from .iso import brute_force_isomorphic, display_template, lemma51_iso, ring_fingerprint
from .rings import (
    Bimodule,
    FormalTriangular,
    LinearRing,
    MatrixRing,
    Origin,
    ProductRing,
    TrivialExtension,
    formal_triangular,
    group_ring,
    induced_bimodule,
    matrix_ring,
    matrix_subring,
    poly_quotient,
    product,
    regular_bimodule,
    trivial_extension,
    upper_triangular,
    zero_bimodule,
    zmod,
)
from .section5 import a_ring, b_ring, c_ring, s_ring, t_ring, u_ring
from .subrings import RingEmbedding, corner, ideal_generated, is_good_subring, is_ideal, quotient_ring

__all__ = [
    "FiniteGroup", "cyclic", "dihedral", "group_product", "is_2_group", "quaternion8",
    "brute_force_isomorphic", "display_template", "lemma51_iso", "ring_fingerprint",
    "Bimodule", "FormalTriangular", "LinearRing", "MatrixRing", "Origin", "ProductRing", "TrivialExtension",
    "formal_triangular", "group_ring", "induced_bimodule", "matrix_ring", "matrix_subring", "poly_quotient",
    "product", "regular_bimodule", "trivial_extension", "upper_triangular", "zero_bimodule", "zmod",
    "a_ring", "b_ring", "c_ring", "s_ring", "t_ring", "u_ring",
    "RingEmbedding", "corner", "ideal_generated", "is_good_subring", "is_ideal", "quotient_ring",
]
