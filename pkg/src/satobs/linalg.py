"""Exact integer and rational linear algebra.

Matrices are tuples of row tuples of Python ints (or Fractions where noted).
Nothing in here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntMatrix:
    return tuple((0,) * c for _ in range(r))


def transpose(m):
    if not m:
        return ()
    return tuple(zip(*m))


def matmul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a) if cb else tuple(() for _ in a)


def matvec(a, x):
    return tuple(sum(p * q for p, q in zip(row, x)) for row in a)


def is_symmetric(m) -> bool:
    n, c = shape(m)
    return n == c and all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def det(m) -> int:
    """Determinant of a square integer matrix by fraction-free (Bareiss) elimination."""
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- Smith normal form -------------------------------------------------------

def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries ``d_1 | d_2 | ...``.  The pivot at every stage is the entry of
    smallest nonzero absolute value in the remaining block, ties going to the
    lowest row and then the lowest column, so the output is deterministic.
    """
    rows, cols = shape(m)
    a = [list(r) for r in m]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for r in a:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best[0]):
                        best = (x, i, j)
            if best is None:
                return _freeze(a), _freeze(u), _freeze(v)
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = a[t][t]
            clean = True
            for i in range(t + 1, rows):
                k = a[i][t] // p
                if k:
                    add_row(t, i, -k)
                if a[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                k = a[t][j] // p
                if k:
                    add_col(t, j, -k)
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            # pivot must divide the whole remaining block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            negate_row(t)
    return _freeze(a), _freeze(u), _freeze(v)


def _freeze(a) -> IntMatrix:
    return tuple(tuple(r) for r in a)


def invariant_factors(m) -> tuple[int, ...]:
    d, _, _ = smith_normal_form(m)
    return tuple(d[i][i] for i in range(min(shape(m))))


def solve_integral(m: Sequence[Sequence[int]], x: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Find an integer ``y`` with ``M y = x``.

    Returns ``None`` when ``x`` is not in the integral column space of ``M``.
    """
    rows, cols = shape(m)
    if len(x) != rows:
        raise ValueError(f"vector of length {len(x)} does not match {rows} rows")
    d, u, v = smith_normal_form(m)
    ux = matvec(u, x)
    z = [0] * cols
    for i in range(rows):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if ux[i] != 0:
                return None
        else:
            if ux[i] % di:
                return None
            z[i] = ux[i] // di
    return matvec(v, z) if cols else ()


# -- signature ---------------------------------------------------------------

def symmetric_signature(s: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric matrix via exact congruence diagonalization.

    Zero eigenvalues (the radical) contribute nothing.  A block whose
    remaining diagonal is entirely zero is split off as a hyperbolic 2x2
    piece, which has signature 0.
    """
    if not is_symmetric(s):
        raise ValueError("signature requires a symmetric matrix")
    a = [[Fraction(x) for x in r] for r in s]
    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != piv]
            a = [[a[i][j] - a[i][piv] * a[piv][j] / p for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j] != 0), None)
        if pair is None:
            break  # zero matrix: radical only
        i, j = pair
        b = a[i][j]
        # inverse of [[0, b], [b, 0]] is [[0, 1/b], [1/b, 0]]
        rest = [k for k in range(n) if k not in (i, j)]
        a = [[a[r][c] - (a[r][i] * a[j][c] + a[r][j] * a[i][c]) / b for c in rest] for r in rest]
    return sig
