"""Framed-linking-matrix calculus.

A framed linking matrix carries pairwise linking numbers off the diagonal and
framings on it.  Indices are 0-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import IntMatrix, as_matrix, det, is_symmetric, matvec, solve_integral


class InadmissibleLink(ValueError):
    pass


class HypothesisViolation(ValueError):
    """The linking vector is not in the integral column space: the link is not null-homologous."""


def framed_matrix(lk: Sequence[Sequence[int]], fr: Sequence[int]) -> IntMatrix:
    n = len(fr)
    return tuple(tuple(fr[i] if i == j else lk[i][j] for j in range(n)) for i in range(n))


def framing_condition(M) -> bool:
    n = len(M)
    return all(M[i][i] == -sum(M[i][j] for j in range(n) if j != i) for i in range(n))


def admissible(M, require_positive: bool = True) -> bool:
    """Nonnegative linking, framing equal to minus the row's linking sum, and (optionally) some linking >= 1."""
    n = len(M)
    if not is_symmetric(M):
        return False
    off = [M[i][j] for i in range(n) for j in range(n) if i != j]
    if any(x < 0 for x in off):
        return False
    if require_positive and not any(x >= 1 for x in off):
        return False
    return framing_condition(M)


@dataclass(frozen=True)
class TwistMove:
    """-1 surgery on an unknot meeting component ``i`` positively and ``j`` negatively once."""

    i: int
    j: int
    sign: int = -1

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("a twist needs two distinct components")
        if self.sign != -1:
            raise ValueError("only -1 framed twists are generated")


def elementary_twist(M, move: TwistMove) -> IntMatrix:
    n = len(M)
    i, j = move.i, move.j
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"twist ({i}, {j}) out of range for {n} components")
    out = [list(r) for r in M]
    out[i][j] -= 1
    out[j][i] -= 1
    out[i][i] += 1
    out[j][j] += 1
    return tuple(tuple(r) for r in out)


def hq_matrix(n: int, i0: int = 0, j0: int = 1) -> IntMatrix:
    """(-1)-framed positive Hopf link on components i0, j0, split from a 0-framed unlink."""
    if n < 2:
        raise ValueError("H_q needs at least two components")
    if i0 == j0 or not (0 <= i0 < n and 0 <= j0 < n):
        raise ValueError(f"bad distinguished pair ({i0}, {j0})")
    M = [[0] * n for _ in range(n)]
    M[i0][j0] = M[j0][i0] = 1
    M[i0][i0] = M[j0][j0] = -1
    return tuple(tuple(r) for r in M)


@dataclass(frozen=True)
class CobordismCertificate:
    initial: IntMatrix
    moves: tuple[TwistMove, ...]
    final: IntMatrix
    pair: tuple[int, int]
    definiteness: str = "negative-definite"

    @property
    def two_handle_count(self) -> int:
        return len(self.moves)

    def replay(self) -> list[IntMatrix]:
        """Every matrix along the move sequence, initial and final included."""
        out = [self.initial]
        for mv in self.moves:
            out.append(elementary_twist(out[-1], mv))
        return out

    def verify(self) -> bool:
        return self.replay()[-1] == self.final


def reduce_to_hopf(M, i0: int = 0, j0: int = 1) -> CobordismCertificate:
    """Reduce an admissible framed linking matrix to ``hq_matrix(n, i0, j0)`` by twists.

    Moves are emitted pair by pair in lexicographic order with the
    distinguished pair last; that pair keeps one unit of linking.
    """
    M = as_matrix(M)
    if not admissible(M, True):
        raise InadmissibleLink("matrix fails the nonnegativity/framing hypotheses")
    i0, j0 = min(i0, j0), max(i0, j0)
    n = len(M)
    if not (0 <= i0 < j0 < n) or M[i0][j0] < 1:
        raise InadmissibleLink(f"distinguished pair ({i0}, {j0}) must have linking >= 1")
    moves = []
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) != (i0, j0):
                moves.extend([TwistMove(i, j)] * M[i][j])
    moves.extend([TwistMove(i0, j0)] * (M[i0][j0] - 1))
    cert = CobordismCertificate(M, tuple(moves), hq_matrix(n, i0, j0), (i0, j0))
    if not cert.verify():
        raise AssertionError("twist sequence does not reach H_q")
    return cert


@dataclass(frozen=True)
class ClasperCertificate:
    """Equal linking matrices guarantee a clasper-surgery sequence; none is constructed."""

    source: IntMatrix
    target: IntMatrix
    equivalent: bool


def clasper_certificate(M1, M2) -> ClasperCertificate:
    M1, M2 = as_matrix(M1), as_matrix(M2)
    if len(M1) != len(M2):
        raise ValueError(f"size mismatch: {len(M1)} vs {len(M2)}")
    return ClasperCertificate(M1, M2, M1 == M2)


def handleslide_reduce(A_J, x: Sequence[int]) -> tuple[int, ...]:
    """Solve ``A_J y = x``.

    Sliding the link component ``-y_i`` times over ``J_i`` clears its linking
    with every ``J_i``.
    """
    y = solve_integral(A_J, x)
    if y is None:
        raise HypothesisViolation(
            f"linking vector {tuple(x)} is not in the integral column space of the surgery matrix; "
            "the link is not null-homologous"
        )
    assert matvec(A_J, y) == tuple(x)
    return y


def bounding_pair_matrix(ell: int) -> IntMatrix:
    """Surgery matrix for a bounding pair map whose curves link ``ell`` times."""
    M = ((-ell - 1, ell), (ell, -ell + 1))
    assert det(M) == -1
    return M
