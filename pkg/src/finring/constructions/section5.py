"""Monomial algebras in two nilpotent variables and their matrix models.

``a_ring``, ``b_ring`` and ``c_ring`` are presented by generators and
monomial relations; ``t_ring``, ``s_ring`` and ``u_ring`` are subrings of
upper-triangular matrices with Toeplitz-style shared entries.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from ..kernel import STRUCTURE_CAP, FiniteRing, materialize
from .rings import LinearRing, MatrixRing, Origin, linear_ring, matrix_subring

__all__ = [
    "a_basis",
    "b_basis",
    "c_basis",
    "a_ring",
    "b_ring",
    "c_ring",
    "t_ring",
    "s_ring",
    "u_ring",
]


def _check_nm(n: int, m: int | None = None) -> None:
    if n < 2 or (m is not None and m < 2):
        raise ValueError("parameters must be at least 2")


def _monomial_ring(R, basis: Sequence, multiply: Callable, label: str, origin: Origin, names, cap, verify) -> LinearRing:
    position = {w: i for i, w in enumerate(basis)}
    terms = []
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            w = multiply(u, v)
            if w is not None:
                terms.append((position[w], i, j))
    R = materialize(R)
    one = [R.zero] * len(basis)
    one[0] = R.one
    return linear_ring(R, terms, one, label, origin, names, cap, verify)


def a_basis(n: int, m: int) -> list[tuple[int, int]]:
    """``(i, j)`` stands for ``x^i y^j``: ``1, x, .., x^(n-1), y, .., y^(m-1)``."""
    return [(0, 0)] + [(i, 0) for i in range(1, n)] + [(0, j) for j in range(1, m)]


def a_ring(n: int, m: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> LinearRing:
    """Commutative ``R[x, y]`` modulo ``x^n = xy = y^m = 0``."""
    _check_nm(n, m)

    def multiply(u, v):
        i, j = u[0] + v[0], u[1] + v[1]
        if (i and j) or i >= n or j >= m:
            return None
        return (i, j)

    names = ["1"] + [f"x^{i}" for i in range(1, n)] + [f"y^{j}" for j in range(1, m)]
    label = f"A({n}, {m}, {R.label})"
    return _monomial_ring(R, a_basis(n, m), multiply, label, Origin("A", (R,), n=n, m=m), names, cap, verify)


def b_basis(n: int, m: int) -> list[tuple[int, int]]:
    """``(i, j)`` stands for ``y^i x^j``, ordered with ``i`` major."""
    return [(i, j) for i in range(m) for j in range(n)]


def b_ring(n: int, m: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> LinearRing:
    """``R<x, y>`` modulo ``x^n = xy = y^m = 0``; normal form ``y^i x^j``."""
    _check_nm(n, m)

    def multiply(u, v):
        if u[1] and v[0]:
            return None
        i, j = u[0] + v[0], u[1] + v[1]
        return (i, j) if i < m and j < n else None

    names = [f"y^{i}x^{j}" for i, j in b_basis(n, m)]
    label = f"B({n}, {m}, {R.label})"
    return _monomial_ring(R, b_basis(n, m), multiply, label, Origin("B", (R,), n=n, m=m), names, cap, verify)


def _alternating(start: str, length: int) -> str:
    other = "y" if start == "x" else "x"
    return "".join(start if k % 2 == 0 else other for k in range(length))


def c_basis(n: int) -> list[str]:
    """Alternating words in x, y surviving ``x^2 = y^2 = 0`` and ``xyx... (n-1 letters) = 0``.

    Order: empty word, then for each length ``k < n-1`` the word starting with
    ``y`` and the one starting with ``x``, then the surviving ``yxy...`` of
    length ``n-1``.
    """
    words = [""]
    for k in range(1, n - 1):
        words += [_alternating("y", k), _alternating("x", k)]
    words.append(_alternating("y", n - 1))
    return words


def c_ring(n: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> LinearRing:
    if n < 3:
        raise ValueError("C_n needs n >= 3")
    basis = set(c_basis(n))

    def multiply(u, v):
        if u and v and u[-1] == v[0]:
            return None
        w = u + v
        return w if w in basis else None

    words = c_basis(n)
    names = ["1"] + words[1:]
    return _monomial_ring(R, words, multiply, f"C({n}, {R.label})", Origin("C", (R,), n=n), names, cap, verify)


def _toeplitz_block(pattern, start: int, size: int, params: Sequence[int]) -> None:
    """Fill a banded block: entry ``(r, r+k)`` of the block gets ``params[k]``."""
    for r in range(size):
        for k in range(size - r):
            pattern[start + r, start + r + k] = params[k]


def t_ring(n: int, m: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> MatrixRing:
    """Block diagonal pair of banded blocks sharing the diagonal ``a``.

    Parameters: ``a, b_1..b_(n-1), c_1..c_(m-1)``.
    """
    _check_nm(n, m)
    N = n + m
    pattern = np.full((N, N), -1, dtype=np.int64)
    b = [0] + list(range(1, n))
    c = [0] + list(range(n, n + m - 1))
    _toeplitz_block(pattern, 0, n, b)
    _toeplitz_block(pattern, n, m, c)
    names = ["a"] + [f"b{i}" for i in range(1, n)] + [f"c{j}" for j in range(1, m)]
    return matrix_subring(R, pattern, f"Tnm({n}, {m}, {R.label})", Origin("Tnm", (R,), n=n, m=m), names, cap, verify)


def s_ring(n: int, m: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> MatrixRing:
    """``(n+m-1)``-square matrices: banded ``n``-block (``b``), banded ``m``-block (``d``)
    overlapping at the diagonal entry ``(n, n)``, and a free corner ``c_ij``.

    Parameters: ``a, b_1..b_(n-1), d_1..d_(m-1)``, then the corner row-major.
    """
    _check_nm(n, m)
    N = n + m - 1
    pattern = np.full((N, N), -1, dtype=np.int64)
    b = [0] + list(range(1, n))
    d = [0] + list(range(n, n + m - 1))
    _toeplitz_block(pattern, 0, n, b)
    _toeplitz_block(pattern, n - 1, m, d)
    names = ["a"] + [f"b{i}" for i in range(1, n)] + [f"d{j}" for j in range(1, m)]
    nxt = n + m - 1
    for r in range(n - 1):
        for s in range(n, N):
            pattern[r, s] = nxt
            names.append(f"c{r + 1},{s + 1}")
            nxt += 1
    return matrix_subring(R, pattern, f"S({n}, {m}, {R.label})", Origin("S", (R,), n=n, m=m), names, cap, verify)


def u_ring(n: int, R: FiniteRing, cap: int = STRUCTURE_CAP, verify: bool = True) -> MatrixRing:
    """``n``-square matrices whose odd rows (1-based) carry ``b_k`` at offset ``k``
    and even rows carry ``c_k``.  Parameters: ``a, b_1..b_(n-1), c_1..c_(n-2)``.
    """
    if n < 3:
        raise ValueError("U_n needs n >= 3")
    pattern = np.full((n, n), -1, dtype=np.int64)
    b = {k: k for k in range(1, n)}
    c = {k: n - 1 + k for k in range(1, n - 1)}
    for r in range(n):
        pattern[r, r] = 0
        for k in range(1, n - r):
            pattern[r, r + k] = b[k] if r % 2 == 0 else c[k]
    names = ["a"] + [f"b{k}" for k in range(1, n)] + [f"c{k}" for k in range(1, n - 1)]
    return matrix_subring(R, pattern, f"U({n}, {R.label})", Origin("U", (R,), n=n), names, cap, verify)
