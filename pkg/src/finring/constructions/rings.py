"""Base rings, coefficient-vector rings, matrix subrings, products and extensions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from ..errors import AxiomViolation, SizeCapExceeded, VerificationFailed, ZeroRing
from ..kernel import (
    AXIOM_CAP,
    STRUCTURE_CAP,
    FiniteRing,
    StructuredRing,
    TableRing,
    materialize,
    verify_axioms,
)
from .groups import FiniteGroup

__all__ = [
    "Origin",
    "LinearRing",
    "MatrixRing",
    "ProductRing",
    "Bimodule",
    "TrivialExtension",
    "FormalTriangular",
    "zmod",
    "linear_ring",
    "matrix_subring",
    "matrix_ring",
    "upper_triangular",
    "poly_quotient",
    "product",
    "regular_bimodule",
    "zero_bimodule",
    "induced_bimodule",
    "trivial_extension",
    "formal_triangular",
    "group_ring",
]


@dataclass(frozen=True)
class Origin:
    """How a ring was built; claims use this to find the ingredients."""

    kind: str
    rings: tuple = ()
    n: int | None = None
    m: int | None = None
    group: FiniteGroup | None = None
    extra: Any = field(default=None, compare=False)


def _finish(R: FiniteRing, verify: bool) -> FiniteRing:
    if R.size == 1:
        raise ZeroRing(f"{R.label} is the zero ring")
    if verify:
        R.axiom_report = verify_axioms(R, cap=AXIOM_CAP)
    return R


def _check_cap(label: str, size: int, cap: int) -> None:
    if size > cap:
        raise SizeCapExceeded(label, size, cap)


def zmod(n: int) -> TableRing:
    """The integers modulo ``n``, element ``k`` being the residue of ``k``."""
    if n < 2:
        raise ValueError("zmod needs n >= 2")
    idx = np.arange(n)
    label = "F2" if n == 2 else f"Zmod({n})"
    R = TableRing((idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n, 0, 1, label, Origin("zmod", n=n))
    R.axiom_report = {"mode": "exhaustive", "triples": n ** 3} if n <= AXIOM_CAP else verify_axioms(R)
    return R


class LinearRing(StructuredRing):
    """Coefficient vectors over a base ring with 0/1 structure constants.

    The product of ``a`` and ``b`` has coordinate ``k`` equal to the sum of
    ``a[i] * b[j]`` over all ``(k, i, j)`` in ``terms``. Coordinate ``i`` is the
    digit of weight ``|base|**i`` in the element index.
    """

    def __init__(self, base: FiniteRing, terms, one_coords: Sequence[int], label: str,
                 origin: Origin | None = None, coord_names: Sequence[str] | None = None,
                 cap: int = STRUCTURE_CAP):
        base = materialize(base)
        dim = len(one_coords)
        q = base.size
        size = q ** dim
        _check_cap(label, size, cap)
        self.base = base
        self.dim = dim
        self.q = q
        self.terms = np.asarray(terms, dtype=np.int64).reshape(-1, 3)
        self.coord_names = list(coord_names) if coord_names else [f"e{i}" for i in range(dim)]
        self._weights = q ** np.arange(dim, dtype=np.int64)
        self._terms_by_output = [[(int(i), int(j)) for kk, i, j in self.terms if kk == k] for k in range(dim)]
        # Z/q with its standard labelling allows plain integer arithmetic.
        origin_kind = getattr(base.origin, "kind", None)
        self._modular = origin_kind == "zmod" and base.zero == 0 and base.one == 1
        self._flat_add = base.add_table.astype(np.int64).ravel()
        self._flat_mul = base.mul_table.astype(np.int64).ravel()
        zero = self.encode([base.zero] * dim)
        one = self.encode(one_coords)
        super().__init__(size, zero, one, label, origin)

    def decode(self, idx) -> np.ndarray:
        """Coordinates with the coordinate axis last."""
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._weights) % self.q

    def encode(self, coords) -> Any:
        coords = np.asarray(coords, dtype=np.int64)
        out = (coords * self._weights).sum(axis=-1)
        return int(out) if out.ndim == 0 else out

    def _split(self, idx: np.ndarray) -> list[np.ndarray]:
        return [(idx // int(w)) % self.q for w in self._weights]

    def _join(self, coords: list[np.ndarray]) -> np.ndarray:
        shape = np.broadcast_shapes(*(c.shape for c in coords))
        out = np.zeros(shape, dtype=np.int64)
        for c, w in zip(coords, self._weights):
            out += c * int(w)
        return out

    def _add_many(self, a, b):
        A, B = self._split(a), self._split(b)
        if self._modular:
            return self._join([(x + y) % self.q for x, y in zip(A, B)])
        flat, q = self._flat_add, self.q
        return self._join([flat[x * q + y] for x, y in zip(A, B)])

    def _mul_many(self, a, b):
        A, B = self._split(a), self._split(b)
        q = self.q
        shape = np.broadcast_shapes(a.shape, b.shape)
        out = []
        for k, pairs in enumerate(self._terms_by_output):
            if self._modular:
                acc = np.zeros(shape, dtype=np.int64)
                for i, j in pairs:
                    acc += A[i] * B[j]
                out.append(acc % q)
            else:
                acc = np.full(shape, self.base.zero, dtype=np.int64)
                for i, j in pairs:
                    acc = self._flat_add[acc * q + self._flat_mul[A[i] * q + B[j]]]
                out.append(acc)
        return self._join(out)

    def _neg_many(self, a):
        neg = self.base.negation_table()
        return self._join([neg[c] for c in self._split(np.asarray(a, dtype=np.int64))])

    def coords(self, index: int) -> list[int]:
        return [int(c) for c in self.decode(index)]

    def describe(self, index: int) -> str:
        parts = [f"{self.base.describe(c)}" for c in self.decode(index)]
        return "(" + ", ".join(parts) + ")"


def linear_ring(base, terms, one_coords, label, origin=None, coord_names=None, cap=STRUCTURE_CAP, verify=True) -> LinearRing:
    return _finish(LinearRing(base, terms, one_coords, label, origin, coord_names, cap), verify)


class MatrixRing(LinearRing):
    """A subring of N x N matrices parameterized by free entries.

    ``pattern[r, s]`` is the parameter stored at entry ``(r, s)`` or -1 for a
    structural zero. A parameter may occupy several entries.
    """

    def __init__(self, base, pattern, label, origin=None, coord_names=None, cap=STRUCTURE_CAP):
        base = materialize(base)
        pattern = np.asarray(pattern, dtype=np.int64)
        N = pattern.shape[0]
        nparams = int(pattern.max()) + 1
        reps: dict[int, tuple[int, int]] = {}
        for r in range(N):
            for s in range(N):
                p = int(pattern[r, s])
                if p >= 0 and p not in reps:
                    reps[p] = (r, s)
        if sorted(reps) != list(range(nparams)):
            raise ValueError("pattern must use parameters 0..k-1")

        def entry_terms(r: int, s: int) -> Counter:
            return Counter(
                (int(pattern[r, t]), int(pattern[t, s]))
                for t in range(N)
                if pattern[r, t] >= 0 and pattern[t, s] >= 0
            )

        rep_terms = {p: entry_terms(*rs) for p, rs in reps.items()}
        for r in range(N):
            for s in range(N):
                p = int(pattern[r, s])
                got = entry_terms(r, s)
                want = rep_terms[p] if p >= 0 else Counter()
                if got != want:
                    raise VerificationFailed(f"{label}: pattern not closed under multiplication at entry", (r, s))
        diag = {int(pattern[r, r]) for r in range(N)}
        if -1 in diag:
            raise VerificationFailed(f"{label}: identity matrix not in the pattern")
        for r in range(N):
            for s in range(N):
                if r != s and int(pattern[r, s]) in diag:
                    raise VerificationFailed(f"{label}: identity matrix not in the pattern", (r, s))
        terms = [(p, i, j) for p in range(nparams) for (i, j), mult in sorted(rep_terms[p].items()) for _ in range(mult)]
        one = [base.one if p in diag else base.zero for p in range(nparams)]
        self.pattern = pattern
        self.N = N
        super().__init__(base, terms, one, label, origin, coord_names, cap)

    def to_matrix(self, index: int) -> np.ndarray:
        c = self.decode(index)
        M = np.full(self.pattern.shape, self.base.zero, dtype=np.int64)
        mask = self.pattern >= 0
        M[mask] = c[self.pattern[mask]]
        return M

    def from_matrix(self, M) -> int:
        """Index of the matrix ``M`` (entries are base-ring indices)."""
        return int(self.from_matrices(np.asarray(M, dtype=np.int64)[None])[0])

    def from_matrices(self, Ms) -> np.ndarray:
        """Indices of a stack of matrices; raises if any lies outside the ring."""
        Ms = np.asarray(Ms, dtype=np.int64)
        if Ms.shape[1:] != self.pattern.shape:
            raise ValueError("matrix has the wrong shape")
        flat = Ms.reshape(Ms.shape[0], -1)
        pat = self.pattern.ravel()
        reps = np.array([int(np.flatnonzero(pat == p)[0]) for p in range(self.dim)])
        coords = flat[:, reps]
        expected = np.where(pat >= 0, coords[:, np.maximum(pat, 0)], self.base.zero)
        bad = np.argwhere(flat != expected)
        if bad.size:
            k, e = bad[0]
            raise VerificationFailed(f"matrix leaves {self.label}", divmod(int(e), self.N))
        return self.encode(coords)

    def describe(self, index: int) -> str:
        M = self.to_matrix(index)
        rows = ["[" + ", ".join(self.base.describe(v) for v in row) + "]" for row in M]
        return "[" + ", ".join(rows) + "]"


def matrix_subring(base, pattern, label, origin=None, coord_names=None, cap=STRUCTURE_CAP, verify=True) -> MatrixRing:
    base = materialize(base)
    nparams = int(np.max(pattern)) + 1
    _check_cap(label, base.size ** nparams, cap)
    return _finish(MatrixRing(base, pattern, label, origin, coord_names, cap), verify)


def matrix_ring(n: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> MatrixRing:
    """Full ``n x n`` matrices over ``R``; coordinates are entries in row-major order."""
    if n < 1:
        raise ValueError("matrix size must be positive")
    pattern = np.arange(n * n).reshape(n, n)
    names = [f"a{r + 1}{s + 1}" for r in range(n) for s in range(n)]
    return matrix_subring(R, pattern, f"M({n}, {R.label})", Origin("matrix", (R,), n=n), names, cap, verify)


def upper_triangular(n: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> MatrixRing:
    if n < 1:
        raise ValueError("matrix size must be positive")
    pattern = np.full((n, n), -1, dtype=np.int64)
    names = []
    for r in range(n):
        for s in range(r, n):
            pattern[r, s] = len(names)
            names.append(f"a{r + 1}{s + 1}")
    return matrix_subring(R, pattern, f"T({n}, {R.label})", Origin("triangular", (R,), n=n), names, cap, verify)


def poly_quotient(R: FiniteRing, n: int, cap: int = STRUCTURE_CAP, verify: bool = True) -> LinearRing:
    """``R[x]/(x^n)``; coordinate ``i`` is the coefficient of ``x^i``."""
    if n < 1:
        raise ValueError("truncation degree must be positive")
    R = materialize(R)
    _check_cap(f"polyq({R.label}, {n})", R.size ** n, cap)
    terms = [(i + j, i, j) for i in range(n) for j in range(n - i)]
    one = [R.one] + [R.zero] * (n - 1)
    names = ["1"] + [f"x^{i}" for i in range(1, n)]
    return linear_ring(R, terms, one, f"polyq({R.label}, {n})", Origin("polyq", (R,), n=n), names, cap, verify)


def group_ring(R: FiniteRing, G: FiniteGroup, cap: int = STRUCTURE_CAP, verify: bool = True) -> LinearRing:
    """``RG`` with coordinate ``g`` the coefficient of group element ``g``."""
    R = materialize(R)
    _check_cap(f"groupring({R.label}, {G.label})", R.size ** G.size, cap)
    terms = [(int(G.op[g, h]), g, h) for g in range(G.size) for h in range(G.size)]
    one = [R.zero] * G.size
    one[G.identity] = R.one
    names = [f"g{g}" for g in range(G.size)]
    return linear_ring(R, terms, one, f"groupring({R.label}, {G.label})", Origin("groupring", (R,), group=G), names, cap, verify)


class ProductRing(StructuredRing):
    """Direct product; element index is mixed-radix with component 0 least significant."""

    def __init__(self, components: Sequence[FiniteRing], label: str, origin: Origin):
        self.components = [materialize(C) for C in components]
        self.radix = [C.size for C in self.components]
        self._weights = np.cumprod([1] + self.radix[:-1]).astype(np.int64)
        size = int(np.prod(self.radix, dtype=np.int64))
        zero = self.encode([C.zero for C in self.components])
        one = self.encode([C.one for C in self.components])
        super().__init__(size, zero, one, label, origin)

    def decode(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self._weights) % np.asarray(self.radix)

    def encode(self, coords):
        out = (np.asarray(coords, dtype=np.int64) * self._weights).sum(axis=-1)
        return int(out) if out.ndim == 0 else out

    def _combine(self, a, b, tables):
        A, B = self.decode(a), self.decode(b)
        C = np.stack([tab[A[..., i], B[..., i]].astype(np.int64) for i, tab in enumerate(tables)], axis=-1)
        return self.encode(C)

    def _neg_many(self, a):
        A = self.decode(a)
        return self.encode(np.stack([C.negation_table()[A[..., i]] for i, C in enumerate(self.components)], axis=-1))

    def _add_many(self, a, b):
        return self._combine(a, b, [C.add_table for C in self.components])

    def _mul_many(self, a, b):
        return self._combine(a, b, [C.mul_table for C in self.components])

    def coords(self, index: int) -> list[int]:
        return [int(c) for c in self.decode(index)]

    def describe(self, index: int) -> str:
        return "(" + ", ".join(C.describe(c) for C, c in zip(self.components, self.decode(index))) + ")"


def product(*rings: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> ProductRing:
    if not rings:
        raise ValueError("product needs at least one factor")
    size = int(np.prod([R.size for R in rings], dtype=np.int64))
    label = "product(" + ", ".join(R.label for R in rings) + ")"
    _check_cap(label, size, cap)
    return _finish(ProductRing(rings, label, Origin("product", tuple(rings))), verify)


class Bimodule:
    """Finite (R, S)-bimodule given by explicit tables.

    ``left[r, m]`` is ``r . m`` and ``right[m, s]`` is ``m . s``.
    """

    def __init__(self, add, zero: int, left_ring: FiniteRing, right_ring: FiniteRing, left, right, label: str = "M"):
        self.left_ring = materialize(left_ring)
        self.right_ring = materialize(right_ring)
        self.add = np.asarray(add, dtype=np.int64)
        self.size = self.add.shape[0]
        self.zero = int(zero)
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.label = label
        for arr in (self.add, self.left, self.right):
            arr.setflags(write=False)
        self.verify()

    def verify(self) -> None:
        R, S, A, L, Rt = self.left_ring, self.right_ring, self.add, self.left, self.right
        n = self.size
        idx = np.arange(n)
        if A.shape != (n, n) or L.shape != (R.size, n) or Rt.shape != (n, S.size):
            raise AxiomViolation("bimodule table shape", ())
        if (A != A.T).any() or (A[self.zero] != idx).any() or not (A == self.zero).any(axis=1).all():
            raise AxiomViolation("bimodule additive group", ())
        self.neg = (A == self.zero).argmax(axis=1)
        for m in range(n):
            if (A[A[m]] != A[m][A]).any():
                raise AxiomViolation("bimodule additive associativity", (m,))
        Ra, Rm = R.add_table.astype(np.int64), R.mul_table.astype(np.int64)
        Sa, Sm = S.add_table.astype(np.int64), S.mul_table.astype(np.int64)
        checks = [
            ("(r+r')m = rm + r'm", L[Ra][:, :, :], A[L[:, None, :], L[None, :, :]]),
            ("r(m+m') = rm + rm'", L[:, A], A[L[:, :, None], L[:, None, :]]),
            ("(rr')m = r(r'm)", L[Rm], np.stack([L[r][L] for r in range(R.size)])),
            ("1m = m", L[R.one], idx),
            ("m(s+s') = ms + ms'", Rt[:, Sa], A[Rt[:, :, None], Rt[:, None, :]]),
            ("(m+m')s = ms + m's", Rt[A], A[Rt[:, None, :], Rt[None, :, :]]),
            ("m(ss') = (ms)s'", Rt[:, Sm], np.stack([Rt[Rt[m]] for m in range(n)])),
            ("m1 = m", Rt[:, S.one], idx),
            ("(rm)s = r(ms)", Rt[L], np.stack([L[r][Rt] for r in range(R.size)])),
        ]
        for name, lhs, rhs in checks:
            if (lhs != rhs).any():
                raise AxiomViolation(f"bimodule {name}", tuple(int(v) for v in np.argwhere(lhs != rhs)[0]))


def regular_bimodule(R: FiniteRing) -> Bimodule:
    R = materialize(R)
    return Bimodule(R.add_table, R.zero, R, R, R.mul_table, R.mul_table, R.label)


def zero_bimodule(R: FiniteRing, S: FiniteRing) -> Bimodule:
    R, S = materialize(R), materialize(S)
    return Bimodule([[0]], 0, R, S, np.zeros((R.size, 1)), np.zeros((1, S.size)), "0")


def induced_bimodule(M: FiniteRing, left_ring: FiniteRing, right_ring: FiniteRing, left_map, right_map) -> Bimodule:
    """``M`` as an (R, S)-bimodule through ring maps ``R -> M`` and ``S -> M``."""
    M = materialize(M)
    left_map, right_map = np.asarray(left_map), np.asarray(right_map)
    mul = M.mul_table.astype(np.int64)
    return Bimodule(M.add_table, M.zero, left_ring, right_ring, mul[left_map, :], mul[:, right_map], M.label)


def _same_ring(A: FiniteRing, B: FiniteRing) -> bool:
    if A is B:
        return True
    A, B = materialize(A), materialize(B)
    return (A.size == B.size and A.zero == B.zero and A.one == B.one
            and (A.add_table == B.add_table).all() and (A.mul_table == B.mul_table).all())


class TrivialExtension(StructuredRing):
    """``T(R, M)``: pairs ``(r, m)`` with ``(r, m)(s, n) = (rs, rn + ms)``; index ``r + |R| m``."""

    def __init__(self, R: FiniteRing, M: Bimodule, label: str, origin: Origin):
        self.R, self.M = materialize(R), M
        q = self.R.size
        super().__init__(q * M.size, self.R.zero + q * M.zero, self.R.one + q * M.zero, label, origin)

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return idx % self.R.size, idx // self.R.size

    def encode(self, r, m):
        return np.asarray(r) + self.R.size * np.asarray(m)

    def _add_many(self, a, b):
        (r, m), (s, n) = self.decode(a), self.decode(b)
        return self.encode(self.R.add_table[r, s], self.M.add[m, n])

    def _neg_many(self, a):
        r, m = self.decode(a)
        return self.encode(self.R.negation_table()[r], self.M.neg[m])

    def _mul_many(self, a, b):
        (r, m), (s, n) = self.decode(a), self.decode(b)
        return self.encode(self.R.mul_table[r, s], self.M.add[self.M.left[r, n], self.M.right[m, s]])

    def describe(self, index: int) -> str:
        r, m = self.decode(index)
        return f"({self.R.describe(int(r))}, {int(m)})"


def trivial_extension(R: FiniteRing, M: Bimodule | None = None, cap: int = STRUCTURE_CAP, verify: bool = True) -> TrivialExtension:
    M = regular_bimodule(R) if M is None else M
    if not (_same_ring(M.left_ring, R) and _same_ring(M.right_ring, R)):
        raise AxiomViolation("trivial extension needs an (R, R)-bimodule", ())
    label = f"trivext({R.label})" if M.label == R.label else f"trivext({R.label}; {M.label})"
    _check_cap(label, R.size * M.size, cap)
    return _finish(TrivialExtension(R, M, label, Origin("trivext", (R,), extra=M)), verify)


class FormalTriangular(StructuredRing):
    """``[[R, N], [0, S]]``: triples ``(r, n, s)`` with index ``r + |R| (n + |N| s)``."""

    def __init__(self, R: FiniteRing, S: FiniteRing, N: Bimodule, label: str, origin: Origin):
        self.R, self.S, self.N = materialize(R), materialize(S), N
        self._radix = (self.R.size, N.size, self.S.size)
        super().__init__(
            self.R.size * N.size * self.S.size,
            self.encode(self.R.zero, N.zero, self.S.zero),
            self.encode(self.R.one, N.zero, self.S.one),
            label,
            origin,
        )

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        q, k = self._radix[0], self._radix[1]
        return idx % q, (idx // q) % k, idx // (q * k)

    def encode(self, r, n, s):
        q, k = self._radix[0], self._radix[1]
        out = np.asarray(r) + q * (np.asarray(n) + k * np.asarray(s))
        return int(out) if np.ndim(out) == 0 else out

    def _add_many(self, a, b):
        (r, n, s), (r2, n2, s2) = self.decode(a), self.decode(b)
        return self.encode(self.R.add_table[r, r2], self.N.add[n, n2], self.S.add_table[s, s2])

    def _neg_many(self, a):
        r, n, s = self.decode(a)
        return self.encode(self.R.negation_table()[r], self.N.neg[n], self.S.negation_table()[s])

    def _mul_many(self, a, b):
        (r, n, s), (r2, n2, s2) = self.decode(a), self.decode(b)
        N = self.N
        return self.encode(self.R.mul_table[r, r2], N.add[N.left[r, n2], N.right[n, s2]], self.S.mul_table[s, s2])

    def describe(self, index: int) -> str:
        r, n, s = self.decode(index)
        return f"[[{self.R.describe(int(r))}, {int(n)}], [0, {self.S.describe(int(s))}]]"


def formal_triangular(R: FiniteRing, S: FiniteRing, N: Bimodule, cap: int = STRUCTURE_CAP, verify: bool = True) -> FormalTriangular:
    if not (_same_ring(N.left_ring, R) and _same_ring(N.right_ring, S)):
        raise AxiomViolation("formal triangular ring needs an (R, S)-bimodule", ())
    label = f"FT({R.label}, {S.label}; {N.label})"
    _check_cap(label, R.size * N.size * S.size, cap)
    return _finish(FormalTriangular(R, S, N, label, Origin("formal_triangular", (R, S), extra=N)), verify)
