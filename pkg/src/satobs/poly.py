"""Integer (Laurent) polynomials and cyclotomic resultants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import det


@dataclass(frozen=True)
class IntPoly:
    """Integer Laurent polynomial ``sum(c_k t^(shift + k))``.

    ``coeffs`` are in ascending degree with trailing zeros stripped; the zero
    polynomial has no coefficients.
    """

    coeffs: tuple[int, ...] = ()
    shift: int = 0

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], shift: int = 0) -> "IntPoly":
        return cls(tuple(coeffs), shift)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the ordinary polynomial ``coeffs`` (ignores the shift)."""
        return len(self.coeffs) - 1

    def __call__(self, x):
        val = sum(c * x ** k for k, c in enumerate(self.coeffs))
        return val * Fraction(x) ** self.shift if self.shift else val

    def trimmed(self) -> "IntPoly":
        """Drop factors of ``t`` so the constant coefficient is nonzero."""
        c = self.coeffs
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        return IntPoly(c[k:], self.shift + k)

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = k + self.shift
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            coef = str(c) if (abs(c) != 1 or not mono) else ("-" if c < 0 else "")
            terms.append(coef + mono)
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    """Newton interpolation through integer points; the result must have integer coefficients."""
    n = len(xs)
    table = [Fraction(y) for y in ys]
    coef = [table[0]]
    for level in range(1, n):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i]) for i in range(n - level)]
        coef.append(table[0])
    # expand Newton form into monomial basis
    poly = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, b in enumerate(basis):
            poly[i] += coef[k] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= xs[k] * b
        basis = nxt
    if any(p.denominator != 1 for p in poly):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntPoly(tuple(int(p) for p in poly))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant of two ordinary integer polynomials via the Sylvester determinant."""
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return 0
    m, n = len(a) - 1, len(b) - 1
    if m == 0:
        return a[0] ** n
    if n == 0:
        return b[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(reversed(a)) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(reversed(b)) + [0] * (size - n - 1 - i))
    return det(rows)


def cyclotomic_resultant_order(delta: IntPoly, q: int) -> int:
    """``|Res(delta, 1 + t + ... + t^(q-1))|``.

    For an Alexander polynomial this is the order of the first homology of the
    ``q``-fold cyclic branched cover; 0 means the homology is infinite.
    """
    if q < 1:
        raise ValueError("q must be positive")
    phi = IntPoly((1,) * q)
    return abs(resultant(delta.trimmed(), phi))
