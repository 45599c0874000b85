"""Seifert matrices, signatures, Alexander polynomials and branched-cover orders for braid closures.

The surface is the one produced by Seifert's algorithm on the closed braid:
one disk per strand, one half-twisted band per crossing.  For generator
column ``i`` with bands at times ``b_1 < ... < b_k`` the basis loop
``a_{i,j}`` runs down band ``j`` and back up band ``j + 1``.  Basis order is
by column, then by band.  Entries follow the ``lk(a_i^+, a_j)`` convention,
normalised so the right-handed trefoil ``s1^3`` gets ``[[-1, 1], [0, -1]]``
and signature -2.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .diagram import BraidWord
from .linalg import IntMatrix, det, is_symmetric, symmetric_signature
from .poly import IntPoly, cyclotomic_resultant_order, interpolate


@dataclass(frozen=True)
class SeifertMatrix:
    V: IntMatrix

    @property
    def size(self) -> int:
        return len(self.V)

    @property
    def genus(self) -> int:
        return self.size // 2


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def seifert_matrix(beta: BraidWord) -> SeifertMatrix:
    """Seifert matrix of a braid whose closure is a knot."""
    if _cycle_length(beta.permutation()) != beta.strands:
        raise ValueError(f"closure of {beta} is not a knot")
    columns: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, beta.strands)}
    for t, (i, s) in enumerate(beta.letters):
        columns[i].append((t, s))
    # loop = (column, (time, sign) of first band, (time, sign) of second band, band index)
    loops = []
    for i in range(1, beta.strands):
        bands = columns[i]
        for j in range(len(bands) - 1):
            loops.append((i, bands[j], bands[j + 1], j))
    n = len(loops)
    V = [[0] * n for _ in range(n)]
    for a, (ia, a1, a2, ja) in enumerate(loops):
        V[a][a] = -a1[1] if a1[1] == a2[1] else 0
        for b, (ib, b1, b2, jb) in enumerate(loops):
            if ib == ia and jb == ja + 1:
                # consecutive loops share band a2
                if a2[1] > 0:
                    V[a][b] = 1
                else:
                    V[b][a] = -1
            elif ib == ia + 1:
                s1, s2, t1, t2 = a1[0], a2[0], b1[0], b2[0]
                if s1 < t1 < s2 < t2:
                    V[a][b] = 1
                elif t1 < s1 < t2 < s2:
                    V[a][b] = -1
    return SeifertMatrix(tuple(tuple(r) for r in V))


def _cycle_length(perm) -> int:
    x, n = perm[0], 1
    while x != 0:
        x = perm[x]
        n += 1
    return n


def _as_seifert(k: Union[BraidWord, SeifertMatrix]) -> SeifertMatrix:
    return seifert_matrix(k) if isinstance(k, BraidWord) else k


def signature(k: Union[BraidWord, SeifertMatrix]) -> int:
    V = _as_seifert(k).V
    sym = tuple(tuple(V[i][j] + V[j][i] for j in range(len(V))) for i in range(len(V)))
    assert is_symmetric(sym)
    return symmetric_signature(sym)


def alexander_polynomial(k: Union[BraidWord, SeifertMatrix]) -> IntPoly:
    """``det(V - t V^T)`` balanced to be symmetric about degree 0, with value 1 at t = 1."""
    V = _as_seifert(k).V
    n = len(V)
    if n == 0:
        return IntPoly((1,))
    xs = list(range(n + 1))

    def value(t):
        return det([[V[i][j] - t * V[j][i] for j in range(n)] for i in range(n)])

    raw = interpolate(xs, [value(x) for x in xs]).trimmed()
    at_one = sum(raw.coeffs)
    if at_one not in (1, -1):
        raise ArithmeticError(f"Alexander polynomial has value {at_one} at 1; not a knot")
    coeffs = tuple(at_one * c for c in raw.coeffs)
    return IntPoly(coeffs, -(len(coeffs) - 1) // 2)


def branched_cover_order(k: Union[BraidWord, SeifertMatrix, IntPoly], q: int) -> int:
    """Order of the first homology of the ``q``-fold cyclic branched cover."""
    if not is_prime_power(q):
        raise ValueError(f"q = {q} is not a prime power")
    delta = k if isinstance(k, IntPoly) else alexander_polynomial(k)
    return cyclotomic_resultant_order(delta, q)


def torus_knot_2(n: int) -> BraidWord:
    """``T_{2,n}`` for odd ``n`` (negative ``n`` gives the mirror)."""
    if n % 2 == 0:
        raise ValueError("T(2, n) is a knot only for odd n")
    return BraidWord(2, ((1, 1 if n > 0 else -1),) * abs(n))
