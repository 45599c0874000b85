"""Exact correction-term (d-invariant) arithmetic.

Covers lens spaces (via the standard recursion), +-1 surgeries on
alternating knots (via the signature formula), connected sums, orientation
reversal, d_max, and the rational-homology-ball test.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Number = Union[int, Fraction]


def d_lens(p: int, q: int, i: int) -> Fraction:
    """d(L(p, q), i) by the recursion on (p, q).  ``q`` and ``i`` are reduced mod ``p``."""
    if p < 1:
        raise ValueError("p must be positive")
    if math.gcd(p, q) != 1:
        raise ValueError(f"gcd({p}, {q}) != 1")
    return _d_lens(p, q % p, i % p)


@lru_cache(maxsize=None)
def _d_lens(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    return (
        Fraction((2 * i + 1 - p - q) ** 2, 4 * p * q)
        - Fraction(1, 4)
        - _d_lens(q, p % q, i % q)
    )


def lens_spectrum(p: int, q: int) -> tuple[Fraction, ...]:
    return tuple(d_lens(p, q, i) for i in range(p))


def d_surgery_pm1_alternating(sigma: int, surgery_sign: int) -> Fraction:
    """d of +1 or -1 surgery on an alternating knot with signature ``sigma``.

    The caller is responsible for the knot being alternating.
    """
    if surgery_sign == 1:
        return Fraction(2 * min(0, -_ceil_div(-sigma, 4)))
    if surgery_sign == -1:
        # -1 surgery on K is minus +1 surgery on the mirror, whose signature is -sigma
        return -d_surgery_pm1_alternating(-sigma, 1)
    raise ValueError("surgery sign must be +1 or -1")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# -- formal connected sums ------------------------------------------------------

@dataclass(frozen=True)
class S3:
    def spectrum(self) -> tuple[Fraction, ...]:
        return (Fraction(0),)

    def __str__(self):
        return "S3"


@dataclass(frozen=True)
class Lens:
    p: int
    q: int
    orientation: int = 1  # -1 for -L(p, q)

    def __post_init__(self):
        if self.p < 1 or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}) is not a lens space")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    def spectrum(self):
        return tuple(self.orientation * d for d in lens_spectrum(self.p, self.q))

    def __str__(self):
        return f"{'-' if self.orientation < 0 else ''}L({self.p},{self.q})"


@dataclass(frozen=True)
class AlternatingSurgery:
    sign: int
    sigma: int
    orientation: int = 1
    label: str = ""

    def spectrum(self):
        return (self.orientation * d_surgery_pm1_alternating(self.sigma, self.sign),)

    def __str__(self):
        name = self.label or f"alternating knot, signature {self.sigma}"
        o = "-" if self.orientation < 0 else ""
        return f"{o}S3_{'+1' if self.sign > 0 else '-1'}({name})"


Atom = Union[S3, Lens, AlternatingSurgery]


@dataclass(frozen=True)
class SpinCIndexedManifold:
    """A formal connected sum; Spin^c labels are tuples of per-atom indices."""

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("a connected sum needs at least one summand")
        for a in self.atoms:
            if not hasattr(a, "spectrum"):
                raise TypeError(f"cannot evaluate d-invariants of {a!r}")

    @classmethod
    def of(cls, *atoms: Atom) -> "SpinCIndexedManifold":
        return cls(tuple(atoms))

    def reversed(self) -> "SpinCIndexedManifold":
        flipped = []
        for a in self.atoms:
            if isinstance(a, S3):
                flipped.append(a)
            elif isinstance(a, Lens):
                flipped.append(Lens(a.p, a.q, -a.orientation))
            else:
                flipped.append(AlternatingSurgery(a.sign, a.sigma, -a.orientation, a.label))
        return SpinCIndexedManifold(tuple(flipped))

    def connect(self, other: "SpinCIndexedManifold") -> "SpinCIndexedManifold":
        return SpinCIndexedManifold(self.atoms + other.atoms)

    def order(self) -> int:
        return math.prod(len(a.spectrum()) for a in self.atoms)

    def __str__(self):
        return " # ".join(str(a) for a in self.atoms)


def d_spectrum(m: SpinCIndexedManifold) -> dict[tuple[int, ...], Fraction]:
    per_atom = [a.spectrum() for a in m.atoms]
    return {
        label: sum((per_atom[k][i] for k, i in enumerate(label)), Fraction(0))
        for label in itertools.product(*(range(len(s)) for s in per_atom))
    }


def d_max(m: SpinCIndexedManifold) -> Fraction:
    # additivity: the max of a sum over independent labels is the sum of maxima
    return sum((max(a.spectrum()) for a in m.atoms), Fraction(0))


class QHBOutcome(enum.Enum):
    OBSTRUCTED = "obstructed"
    INCONCLUSIVE = "inconclusive"


def qhb_obstruction(m: SpinCIndexedManifold) -> QHBOutcome:
    """A rational homology sphere with d_max < 0 cannot bound a rational homology ball."""
    return QHBOutcome.OBSTRUCTED if d_max(m) < 0 else QHBOutcome.INCONCLUSIVE


# -- the constant C and the Z_k bound --------------------------------------------

@dataclass(frozen=True)
class AffineConstant:
    """``numeric + sum(symbols)``: an exact part plus named existence-only constants."""

    numeric: Fraction = Fraction(0)
    symbols: tuple[str, ...] = ()

    @property
    def is_numeric(self) -> bool:
        return not self.symbols

    def __str__(self):
        parts = [] if (self.numeric == 0 and self.symbols) else [str(self.numeric)]
        return " + ".join(parts + list(self.symbols))


@dataclass(frozen=True)
class ZkBound:
    k: Union[int, str]
    constant: str
    expression: str
    value: Union[Fraction, None]
    threshold: Union[int, None]  # least k with -2k + 2C < 0
    threshold_expression: str


def zk_bound(k: Union[int, str] = "k", C: Union[Number, AffineConstant, str] = "C") -> ZkBound:
    """Upper bound ``-2k + 2C`` for d_max of the test manifolds Z_k."""
    if isinstance(C, AffineConstant) and C.is_numeric:
        C = C.numeric
    if isinstance(k, int) and k < 0:
        raise ValueError("k must be nonnegative")
    if isinstance(C, (int, Fraction)):
        C = Fraction(C)
        threshold = math.floor(C) + 1
        value = -2 * k + 2 * C if isinstance(k, int) else None
        expr = f"{value}" if value is not None else f"-2{k} + {2 * C}"
        return ZkBound(k, str(C), expr, value, threshold, f"k >= {threshold}")
    cname = str(C)
    cterm = cname if cname.isidentifier() else f"({cname})"
    kterm = f"2{k}" if isinstance(k, str) else str(2 * k)
    return ZkBound(k, cname, f"-{kterm} + 2{cterm}" if isinstance(k, str) else f"-{kterm} + 2*{cterm}",
                   None, None, f"k > {cterm}")
