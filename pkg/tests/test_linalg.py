import itertools
import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from satobs.linalg import (
    det,
    identity,
    invariant_factors,
    matmul,
    matvec,
    smith_normal_form,
    solve_integral,
    symmetric_signature,
    transpose,
)


def matrices(max_r=4, max_c=4, lo=-9, hi=9):
    return st.integers(1, max_r).flatmap(
        lambda r: st.integers(1, max_c).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square(n_max=5, lo=-6, hi=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def symmetric(n_max=6, lo=-5, hi=5):
    def build(n):
        return st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda xs: _sym(n, xs)
        )
    return st.integers(1, n_max).flatmap(build)


def _sym(n, xs):
    m = [[0] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_snf_factorization(m):
    D, U, V = smith_normal_form(m)
    assert matmul(matmul(U, m), V) == D
    assert abs(det(U)) == 1 and abs(det(V)) == 1
    r, c = len(m), len(m[0])
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(x >= 0 for x in diag)
    nz = [x for x in diag if x]
    assert diag[: len(nz)] == nz  # nonzero entries come first
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


def _determinantal_divisors(m):
    """gcd of all k x k minors, via sympy; an oracle independent of the elimination."""
    r, c = len(m), len(m[0])
    M = sympy.Matrix(m)
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = math.gcd(g, int(M.extract(list(rows), list(cols)).det()))
        out.append(g)
    return out


@given(matrices(3, 3, -6, 6))
@settings(max_examples=60, deadline=None)
def test_invariant_factors_match_minor_gcds(m):
    inv = invariant_factors(m)
    dd = _determinantal_divisors(m)
    prod = 1
    for k, g in enumerate(dd):
        if g == 0:
            assert all(x == 0 for x in inv[k:])
            break
        prod *= inv[k]
        assert prod == g


def test_snf_known():
    D, _, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[i][i] for i in range(3)] == [2, 6, 12]
    assert invariant_factors([[0, 0], [0, 0]]) == (0, 0)  # zeros are free summands
    assert invariant_factors([[3, 0], [0, 0]]) == (3, 0)


@given(square())
@settings(max_examples=150, deadline=None)
def test_det_against_sympy(m):
    assert det(m) == int(sympy.Matrix(m).det())


@given(matrices(4, 4, -5, 5), st.data())
@settings(max_examples=150, deadline=None)
def test_solve_integral_in_image(m, data):
    y = data.draw(st.lists(st.integers(-4, 4), min_size=len(m[0]), max_size=len(m[0])))
    x = matvec(m, y)
    sol = solve_integral(m, x)
    assert sol is not None
    assert matvec(m, sol) == x


def test_solve_integral_no_solution():
    assert solve_integral([[2, 0], [0, 3]], [1, 0]) is None
    assert solve_integral([[1, 1], [1, 1]], [1, 2]) is None
    assert solve_integral([[2, 4]], [6]) in ((3, 0), (1, 1), (-1, 2)) or matvec([[2, 4]], solve_integral([[2, 4]], [6])) == (6,)


@given(square(3, -3, 3), st.data())
@settings(max_examples=80, deadline=None)
def test_solve_integral_none_means_unsolvable(m, data):
    x = data.draw(st.lists(st.integers(-5, 5), min_size=len(m), max_size=len(m)))
    if solve_integral(m, x) is None:
        # the box search is an oracle only in one direction, so search a generous box
        n = len(m[0])
        for y in itertools.product(range(-6, 7), repeat=n):
            assert matvec(m, y) != tuple(x)


@given(symmetric())
@settings(max_examples=200, deadline=None)
def test_signature_against_eigenvalues(s):
    ev = np.linalg.eigvalsh(np.array(s, dtype=float))
    expected = int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))
    assert symmetric_signature(s) == expected


def test_signature_hyperbolic_and_errors():
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0, 0, 1], [0, 0, 0], [1, 0, 0]]) == 0
    assert symmetric_signature(identity(3)) == 3
    assert symmetric_signature([]) == 0
    with pytest.raises(ValueError):
        symmetric_signature([[0, 1], [2, 0]])


@given(symmetric(4), square(4, -2, 2))
@settings(max_examples=100, deadline=None)
def test_signature_congruence_invariant(s, p):
    n = len(s)
    p = [row[:n] + [0] * (n - len(row[:n])) for row in p[:n]]
    while len(p) < n:
        p.append([0] * n)
    if det(p) == 0:
        return
    assert symmetric_signature(matmul(matmul(transpose(p), s), p)) == symmetric_signature(s)
