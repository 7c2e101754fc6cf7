"""Finite groups presented by Cayley tables."""

from __future__ import annotations

import numpy as np

from ..errors import AxiomViolation

__all__ = ["FiniteGroup", "cyclic", "group_product", "dihedral", "quaternion8", "is_2_group"]


class FiniteGroup:
    """Group on elements ``0..size-1`` with Cayley table ``op``."""

    def __init__(self, op, identity: int, label: str):
        op = np.asarray(op, dtype=np.int64)
        self.size = op.shape[0]
        self.op = op
        self.op.setflags(write=False)
        self.identity = int(identity)
        self.label = label
        self._verify()
        hit = op == self.identity
        self.inverse = hit.argmax(axis=1)

    def _verify(self) -> None:
        n, op, e = self.size, self.op, self.identity
        idx = np.arange(n)
        if op.shape != (n, n) or ((op < 0) | (op >= n)).any():
            raise AxiomViolation("group closure", ())
        if (op[e] != idx).any() or (op[:, e] != idx).any():
            raise AxiomViolation("group identity", (e,))
        if not (op == e).any(axis=1).all():
            raise AxiomViolation("group inverse", (int(np.flatnonzero(~(op == e).any(axis=1))[0]),))
        for a in range(n):
            diff = op[op[a]] != op[a][op]
            if diff.any():
                b, c = np.argwhere(diff)[0]
                raise AxiomViolation("group associativity", (a, int(b), int(c)))

    def mul(self, a: int, b: int) -> int:
        return int(self.op[a, b])

    def element_order(self, g: int) -> int:
        k, x = 1, int(g)
        while x != self.identity:
            x = int(self.op[x, g])
            k += 1
        return k

    def element_orders(self) -> list[int]:
        return [self.element_order(g) for g in range(self.size)]

    def powers(self, g: int) -> list[int]:
        """``[1, g, g^2, ...]`` up to the order of ``g``."""
        out, x = [self.identity], int(g)
        while x != self.identity:
            out.append(x)
            x = int(self.op[x, g])
        return out

    @property
    def is_abelian(self) -> bool:
        return bool((self.op == self.op.T).all())

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.label} order={self.size}>"


def is_2_group(G: FiniteGroup) -> bool:
    n = G.size
    return n & (n - 1) == 0


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, 0, f"C({n})")


def group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Direct product; element ``g + |G| h`` is the pair ``(g, h)``."""
    g = np.arange(G.size * H.size) % G.size
    h = np.arange(G.size * H.size) // G.size
    op = G.op[g[:, None], g[None, :]] + G.size * H.op[h[:, None], h[None, :]]
    return FiniteGroup(op, G.identity + G.size * H.identity, f"prod({G.label}, {H.label})")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; element ``k + n e`` is ``r^k s^e``."""
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    size = 2 * n
    op = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        k1, e1 = a % n, a // n
        for b in range(size):
            k2, e2 = b % n, b // n
            # s r^k = r^{-k} s
            k = (k1 + (-k2 if e1 else k2)) % n
            op[a, b] = k + n * ((e1 + e2) % 2)
    return FiniteGroup(op, 0, f"D{n}")


def quaternion8() -> FiniteGroup:
    """Q8 = {+-1, +-i, +-j, +-k}; element ``u + 4 s`` is ``(-1)^s`` times unit ``u``."""
    # unit products among 1, i, j, k as (sign, unit)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    op = np.empty((8, 8), dtype=np.int64)
    for a in range(8):
        for b in range(8):
            sign, unit = table[(a % 4, b % 4)]
            neg = (a // 4 + b // 4 + (sign < 0)) % 2
            op[a, b] = unit + 4 * neg
    return FiniteGroup(op, 0, "Q8")
