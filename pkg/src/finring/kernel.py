"""Finite rings on dense element indices, elements, subsets and axiom checks."""

from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator

import numpy as np

from .errors import AxiomViolation, RingMismatch, SizeCapExceeded, ZeroRing

TABLE_CAP = 4096
STRUCTURE_CAP = 65536
AXIOM_CAP = 256
AXIOM_SAMPLES = 100_000
AXIOM_SEED = 0

# Materialization works on row blocks so a 4096-element ring never holds
# more than ~1M temporary pairs at once.
_PAIR_CHUNK = 1 << 20

__all__ = [
    "FiniteRing",
    "TableRing",
    "StructuredRing",
    "Element",
    "Subset",
    "make_ring",
    "materialize",
    "verify_axioms",
    "center",
    "commutant",
    "index_dtype",
    "TABLE_CAP",
    "STRUCTURE_CAP",
    "table_cap",
    "table_cap_override",
    "AXIOM_CAP",
]


def index_dtype(size: int) -> np.dtype:
    return np.dtype(np.uint16) if size <= 0xFFFF else np.dtype(np.int64)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


class FiniteRing:
    """A finite unital ring whose elements are the indices ``0..size-1``.

    Subclasses provide vectorized ``_add_many``/``_mul_many``; everything
    else (scalar arithmetic, negation, powers, caches) lives here. Rings are
    immutable. Derived data is memoized through :meth:`memo`, which holds a
    per-ring lock so concurrent readers compute each entry once.
    """

    backend: str = "abstract"

    def __init__(self, size: int, zero: int, one: int, label: str, origin: Any = None):
        self.size = int(size)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.origin = origin
        self._cache: dict[str, Any] = {}
        self._lock = threading.RLock()

    # -- vectorized operations -------------------------------------------
    # Operands broadcast against each other; subclasses keep them unexpanded
    # as long as possible so row-times-all products stay cheap.
    def add_many(self, a, b) -> np.ndarray:
        return self._add_many(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def mul_many(self, a, b) -> np.ndarray:
        return self._mul_many(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))

    def neg_many(self, a) -> np.ndarray:
        return self.negation_table()[np.asarray(a, dtype=np.int64)]

    def _add_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _mul_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # -- scalar operations -----------------------------------------------
    def add(self, a: int, b: int) -> int:
        return int(self.add_many(a, b))

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_many(a, b))

    def neg(self, a: int) -> int:
        return int(self.negation_table()[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            raise ValueError("exponent must be non-negative")
        result, base = self.one, int(a)
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under Z -> R."""
        result = self.zero
        step = self.one if k >= 0 else self.neg(self.one)
        for _ in range(abs(k)):
            result = self.add(result, step)
        return result

    def _neg_many(self, a: np.ndarray) -> np.ndarray | None:
        """Coordinate-wise negation when the encoding allows it; ``None`` otherwise."""
        return None

    def negation_table(self) -> np.ndarray:
        def build():
            idx = np.arange(self.size)
            direct = self._neg_many(idx)
            if direct is not None:
                return _frozen(np.asarray(direct, dtype=np.int64))
            out = np.empty(self.size, dtype=np.int64)
            for start in range(0, self.size, 256):
                rows = idx[start:start + 256]
                sums = self.add_many(rows[:, None], idx[None, :])
                hit = sums == self.zero
                if not hit.any(axis=1).all():
                    bad = int(rows[~hit.any(axis=1)][0])
                    raise AxiomViolation("additive inverse", (bad,))
                out[start:start + 256] = hit.argmax(axis=1)
            return _frozen(out)

        return self.memo("negation", build)

    # -- conveniences ----------------------------------------------------
    def elements(self) -> range:
        return range(self.size)

    def __call__(self, index: int) -> "Element":
        index = int(index)
        if not 0 <= index < self.size:
            raise IndexError(f"index {index} out of range for ring of size {self.size}")
        return Element(self, index)

    def __len__(self) -> int:
        return self.size

    def describe(self, index: int) -> str:
        """Human-readable rendering of one element."""
        return str(int(index))

    def memo(self, key: str, build: Callable[[], Any]) -> Any:
        try:
            return self._cache[key]
        except KeyError:
            pass
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label!r} size={self.size}>"


class TableRing(FiniteRing):
    """Ring given by dense ``size x size`` addition and multiplication tables."""

    backend = "table"

    def __init__(self, add_table, mul_table, zero: int, one: int, label: str, origin: Any = None):
        add_table = np.asarray(add_table)
        mul_table = np.asarray(mul_table)
        size = add_table.shape[0]
        super().__init__(size, zero, one, label, origin)
        dtype = index_dtype(size)
        self.add_table = _frozen(np.ascontiguousarray(add_table, dtype=dtype))
        self.mul_table = _frozen(np.ascontiguousarray(mul_table, dtype=dtype))

    def _add_many(self, a, b):
        return self.add_table[a, b].astype(np.int64)

    def _mul_many(self, a, b):
        return self.mul_table[a, b].astype(np.int64)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def negation_table(self) -> np.ndarray:
        def build():
            hit = self.add_table == self.zero
            missing = ~hit.any(axis=1)
            if missing.any():
                raise AxiomViolation("additive inverse", (int(np.flatnonzero(missing)[0]),))
            return _frozen(hit.argmax(axis=1).astype(np.int64))

        return self.memo("negation", build)


class StructuredRing(FiniteRing):
    """Ring whose operations are computed from an encoding of its elements.

    Once materialized, scalar operations are served from the cached tables.
    """

    backend = "structure"

    def _table(self) -> TableRing | None:
        return self._cache.get("materialized")

    def add(self, a: int, b: int) -> int:
        t = self._table()
        return t.add(a, b) if t is not None else int(self.add_many(a, b))

    def mul(self, a: int, b: int) -> int:
        t = self._table()
        return t.mul(a, b) if t is not None else int(self.mul_many(a, b))

    def negation_table(self) -> np.ndarray:
        t = self._table()
        if t is not None:
            return t.negation_table()
        return super().negation_table()


_active_table_cap = TABLE_CAP


def table_cap() -> int:
    """The table cap in force (``TABLE_CAP`` unless overridden)."""
    return _active_table_cap


@contextmanager
def table_cap_override(cap: int):
    """Temporarily change the cap ``materialize`` applies when none is passed."""
    global _active_table_cap
    if cap < 1:
        raise ValueError("table cap must be positive")
    saved, _active_table_cap = _active_table_cap, cap
    try:
        yield
    finally:
        _active_table_cap = saved


def materialize(R: FiniteRing, cap: int | None = None) -> TableRing:
    """Return a table-backed ring with exactly the operations of ``R``."""
    if isinstance(R, TableRing):
        return R
    cap = _active_table_cap if cap is None else cap
    if R.size > cap:
        raise SizeCapExceeded(f"materialize {R.label}", R.size, cap)

    def build():
        n = R.size
        dtype = index_dtype(n)
        add = np.empty((n, n), dtype=dtype)
        mul = np.empty((n, n), dtype=dtype)
        idx = np.arange(n)
        rows = max(1, _PAIR_CHUNK // n)
        for start in range(0, n, rows):
            block = idx[start:start + rows]
            add[start:start + rows] = R.add_many(block[:, None], idx[None, :])
            mul[start:start + rows] = R.mul_many(block[:, None], idx[None, :])
        return TableRing(add, mul, R.zero, R.one, R.label, R.origin)

    return R.memo("materialized", build)


def _first_true(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(mask)[0])


def verify_axioms(
    R: FiniteRing,
    cap: int = AXIOM_CAP,
    samples: int = AXIOM_SAMPLES,
    seed: int = AXIOM_SEED,
) -> dict:
    """Check the ring axioms, exhaustively up to ``cap`` elements.

    Above the cap, ``samples`` random triples drawn with ``seed`` are checked.
    Returns a small report; raises :class:`AxiomViolation` with a witness.
    """
    n = R.size
    z, o = R.zero, R.one
    idx = np.arange(n)
    if not (0 <= z < n and 0 <= o < n):
        raise AxiomViolation("identity index out of range", (z, o))
    if n <= cap:
        T = R if isinstance(R, TableRing) else materialize(R, cap=max(cap, n))
        A, M = T.add_table.astype(np.int64), T.mul_table.astype(np.int64)
        for name, tab in (("addition closure", A), ("multiplication closure", M)):
            bad = (tab < 0) | (tab >= n)
            if bad.any():
                raise AxiomViolation(name, _first_true(bad))
        if (A != A.T).any():
            raise AxiomViolation("additive commutativity", _first_true(A != A.T))
        if (A[z] != idx).any():
            raise AxiomViolation("additive identity", (int(np.flatnonzero(A[z] != idx)[0]),))
        neg = R.negation_table()
        if (A[idx, neg] != z).any():
            raise AxiomViolation("additive inverse", (int(np.flatnonzero(A[idx, neg] != z)[0]),))
        if (M[o] != idx).any() or (M[:, o] != idx).any():
            bad = np.flatnonzero((M[o] != idx) | (M[:, o] != idx))
            raise AxiomViolation("multiplicative identity", (int(bad[0]),))
        for a in range(n):
            # (a+b)+c vs a+(b+c), (ab)c vs a(bc), a(b+c) vs ab+ac, (b+c)a vs ba+ca
            checks = (
                ("additive associativity", A[A[a]], A[a][A]),
                ("associativity", M[M[a]], M[a][M]),
                ("left distributivity", M[a][A], A[M[a][:, None], M[a][None, :]]),
                ("right distributivity", M[:, a][A], A[M[:, a][:, None], M[:, a][None, :]]),
            )
            for name, lhs, rhs in checks:
                diff = lhs != rhs
                if diff.any():
                    b, c = _first_true(diff)
                    raise AxiomViolation(name, (a, b, c))
        return {"mode": "exhaustive", "triples": n ** 3}

    rng = np.random.default_rng(seed)
    a, b, c = (rng.integers(0, n, size=samples) for _ in range(3))
    ad, mu = R.add_many, R.mul_many
    checks = (
        ("additive commutativity", ad(a, b), ad(b, a)),
        ("additive identity", ad(z, a), a),
        ("multiplicative identity", mu(o, a), a),
        ("multiplicative identity", mu(a, o), a),
        ("additive associativity", ad(ad(a, b), c), ad(a, ad(b, c))),
        ("associativity", mu(mu(a, b), c), mu(a, mu(b, c))),
        ("left distributivity", mu(a, ad(b, c)), ad(mu(a, b), mu(a, c))),
        ("right distributivity", mu(ad(b, c), a), ad(mu(b, a), mu(c, a))),
    )
    for name, lhs, rhs in checks:
        diff = np.flatnonzero(lhs != rhs)
        if diff.size:
            i = diff[0]
            raise AxiomViolation(name, (a[i], b[i], c[i]))
    neg = R.neg_many(a)
    if (ad(a, neg) != z).any():
        raise AxiomViolation("additive inverse", (int(a[np.flatnonzero(ad(a, neg) != z)[0]]),))
    return {"mode": "sampled", "triples": int(samples), "seed": int(seed)}


def make_ring(size: int, add, mul, zero: int, one: int, label: str = "ring", *, axiom_cap: int = AXIOM_CAP) -> TableRing:
    """Build and verify a table-backed ring from explicit operation tables."""
    if size < 1:
        raise ValueError("size must be positive")
    if size == 1:
        raise ZeroRing("the zero ring is not accepted")
    add = np.asarray(add, dtype=np.int64)
    mul = np.asarray(mul, dtype=np.int64)
    if add.shape != (size, size) or mul.shape != (size, size):
        raise ValueError(f"operation tables must have shape ({size}, {size})")
    for name, tab in (("addition closure", add), ("multiplication closure", mul)):
        bad = (tab < 0) | (tab >= size)
        if bad.any():
            raise AxiomViolation(name, _first_true(bad))
    R = TableRing(add, mul, zero, one, label)
    R.axiom_report = verify_axioms(R, cap=axiom_cap)
    return R


@dataclass(frozen=True)
class Element:
    """An element of a specific ring; supports ``+ - * **`` and negation."""

    ring: FiniteRing
    index: int

    def _other(self, other: "Element | int") -> int:
        if isinstance(other, Element):
            if other.ring is not self.ring:
                raise RingMismatch(f"{self.ring.label} vs {other.ring.label}")
            return other.index
        return self.ring.from_int(int(other))

    def __add__(self, other):
        return Element(self.ring, self.ring.add(self.index, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Element(self.ring, self.ring.sub(self.index, self._other(other)))

    def __rsub__(self, other):
        return Element(self.ring, self.ring.sub(self._other(other), self.index))

    def __mul__(self, other):
        return Element(self.ring, self.ring.mul(self.index, self._other(other)))

    def __rmul__(self, other):
        return Element(self.ring, self.ring.mul(self._other(other), self.index))

    def __neg__(self):
        return Element(self.ring, self.ring.neg(self.index))

    def __pow__(self, k: int):
        return Element(self.ring, self.ring.pow(self.index, k))

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.ring is other.ring and self.index == other.index
        return NotImplemented

    def __hash__(self) -> int:
        return hash((id(self.ring), self.index))

    def __repr__(self) -> str:
        return f"{self.ring.describe(self.index)}"


class Subset:
    """A membership mask over the element indices of a ring."""

    __slots__ = ("ring", "mask")

    def __init__(self, ring: FiniteRing, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (ring.size,):
            raise ValueError(f"mask length {mask.shape} does not match ring size {ring.size}")
        self.ring = ring
        self.mask = _frozen(mask.copy()) if mask.flags.writeable else mask

    @classmethod
    def from_indices(cls, ring: FiniteRing, indices: Iterable[int]) -> "Subset":
        mask = np.zeros(ring.size, dtype=bool)
        mask[np.fromiter((int(i) for i in indices), dtype=np.int64)] = True
        return cls(ring, mask)

    @classmethod
    def full(cls, ring: FiniteRing) -> "Subset":
        return cls(ring, np.ones(ring.size, dtype=bool))

    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in np.flatnonzero(self.mask))

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __contains__(self, item) -> bool:
        if isinstance(item, Element):
            if item.ring.size != self.ring.size:
                raise RingMismatch("element from a different ring")
            item = item.index
        return bool(self.mask[int(item)])

    def _check(self, other: "Subset") -> np.ndarray:
        if other.ring.size != self.ring.size:
            raise RingMismatch("subsets of different rings")
        return other.mask

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.ring, self.mask & self._check(other))

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.ring, self.mask | self._check(other))

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.ring, self.mask & ~self._check(other))

    def __invert__(self) -> "Subset":
        return Subset(self.ring, ~self.mask)

    def __le__(self, other: "Subset") -> bool:
        return not (self.mask & ~self._check(other)).any()

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return other.ring.size == self.ring.size and bool((self.mask == other.mask).all())

    __hash__ = None

    def isdisjoint(self, other: "Subset") -> bool:
        return not (self.mask & self._check(other)).any()

    def translate(self, by: int) -> "Subset":
        """The coset ``by + S``."""
        image = self.ring.add_many(by, self.indices())
        return Subset.from_indices(self.ring, image)

    def __repr__(self) -> str:
        members = self.indices()
        if members.size > 16:
            return f"Subset({self.ring.label}, |S|={members.size})"
        return f"Subset({self.ring.label}, {members.tolist()})"


def center(R: FiniteRing) -> Subset:
    """Elements commuting with everything."""

    def build():
        M = materialize(R).mul_table
        return Subset(R, (M == M.T).all(axis=1))

    return R.memo("center", build)


def commutant(R: FiniteRing, a: Element | int) -> Subset:
    """Elements commuting with ``a``."""
    a = int(a)
    idx = np.arange(R.size)
    return Subset(R, R.mul_many(a, idx) == R.mul_many(idx, a))
