"""Hypothesis checks and obstruction certificates for satellite operators.

Three tests are implemented, all fed by ``CoverData`` (the lift data of the
pattern curve in a prime-power branched cover of the pattern's image of the
unknot):

* ``check_null_homologous``: lifts null-homologous, linking nonnegative and not
  identically zero  =>  the pattern is not a concordance homomorphism.
* ``check_finite_order``: lifts of odd order ``n``, or ``n`` dividing a
  nonzero winding number  =>  same conclusion.
* ``check_composite``: composing with a pattern ``R`` of winding a nonzero
  multiple of ``n``  =>  the composite is not a pseudo-homomorphism.

Nonpositive linking is handled by passing to the mirrored pattern.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from .cobordism import (
    ClasperCertificate,
    CobordismCertificate,
    clasper_certificate,
    framed_matrix,
    hq_matrix,
    reduce_to_hopf,
)
from .covering import is_deck_equivariant, lift
from .diagram import AnyWord
from .dinv import AffineConstant, Lens, SpinCIndexedManifold, ZkBound, d_spectrum, zk_bound
from .seifert import is_prime_power


class InconsistentCoverData(ValueError):
    pass


class NotNullHomologous(ValueError):
    """Raised by the null-homologous test when the lifts have order > 1."""


class PreconditionError(ValueError):
    pass


# -- ambient descriptions -------------------------------------------------------

@dataclass(frozen=True)
class TrivialS3:
    def exponent(self) -> int:
        return 1

    def order(self) -> int:
        return 1


@dataclass(frozen=True)
class LensSum:
    """The cover is declared to be ``#_i L(m_i, 1)`` (``m_i < 0`` for reversed orientation)."""

    ms: tuple[int, ...]

    def __post_init__(self):
        if not self.ms or any(m == 0 for m in self.ms):
            raise ValueError("lens sum needs nonzero m_i")

    def exponent(self) -> int:
        return math.lcm(*(abs(m) for m in self.ms))

    def order(self) -> int:
        return math.prod(abs(m) for m in self.ms)

    def manifold(self) -> SpinCIndexedManifold:
        return SpinCIndexedManifold(
            tuple(Lens(abs(m), 1, 1 if m > 0 else -1) for m in self.ms)
        )


@dataclass(frozen=True)
class UserSupplied:
    """First homology given by invariant factors; nothing else is known."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if any(f < 1 for f in self.factors):
            raise ValueError("invariant factors of a rational homology sphere are positive")

    def exponent(self) -> int:
        return math.lcm(*self.factors) if self.factors else 1

    def order(self) -> int:
        return math.prod(self.factors)


Ambient = Union[TrivialS3, LensSum, UserSupplied]

DIAGRAM = "diagram-computed"
USER = "user-supplied"


@dataclass(frozen=True)
class CoverData:
    q: int
    w: int
    lk: tuple[tuple[Fraction, ...], ...]
    n: int = 1
    fr: Optional[tuple[Fraction, ...]] = None
    ambient: Ambient = field(default_factory=TrivialS3)
    provenance: str = USER

    def __post_init__(self):
        object.__setattr__(self, "lk", tuple(tuple(Fraction(x) for x in r) for r in self.lk))
        if self.fr is not None:
            object.__setattr__(self, "fr", tuple(Fraction(x) for x in self.fr))

    def validate(self) -> "CoverData":
        """The consistency gate applied to every CoverData before use."""
        q = self.q
        if q != 1 and not is_prime_power(q):
            raise InconsistentCoverData(f"q = {q} is not a prime power")
        if self.w % q:
            raise InconsistentCoverData(f"q = {q} does not divide the winding number {self.w}")
        if len(self.lk) != q or any(len(r) != q for r in self.lk):
            raise InconsistentCoverData(f"linking matrix must be {q}x{q}")
        if any(self.lk[i][j] != self.lk[j][i] for i in range(q) for j in range(q)):
            raise InconsistentCoverData("linking matrix is not symmetric")
        if not is_deck_equivariant(self.lk):
            raise InconsistentCoverData("linking matrix is not invariant under the deck transformation")
        if self.n < 1:
            raise InconsistentCoverData("order of the lift class must be positive")
        exp = self.ambient.exponent()
        if exp % self.n:
            raise InconsistentCoverData(
                f"lift class order {self.n} does not divide the homology exponent {exp}"
            )
        if q == 2 and (self.n % 2 == 0 or self.ambient.order() % 2 == 0):
            raise InconsistentCoverData(
                "double branched covers of knots have odd-order homology; even order supplied"
            )
        if self.n == 1:
            if any(x.denominator != 1 for r in self.lk for x in r):
                raise InconsistentCoverData("null-homologous lifts must have integral linking")
        if self.fr is not None:
            if len(self.fr) != q:
                raise InconsistentCoverData("framing vector has the wrong length")
            if self.n != 1:
                raise InconsistentCoverData("framings are only defined for null-homologous lifts")
            if self.fr != self.expected_framings():
                raise InconsistentCoverData(
                    f"framings {self.fr} violate fr_i = -sum_j lk_ij ({self.expected_framings()})"
                )
        elif self.n == 1:
            raise InconsistentCoverData("null-homologous lifts need framings")
        return self

    def expected_framings(self) -> tuple[Fraction, ...]:
        q = self.q
        return tuple(-sum((self.lk[i][j] for j in range(q) if j != i), Fraction(0)) for i in range(q))

    def off_diagonal(self) -> list[Fraction]:
        return [self.lk[i][j] for i in range(self.q) for j in range(self.q) if i != j]

    def mirrored(self) -> "CoverData":
        return replace(
            self,
            lk=tuple(tuple(-x for x in r) for r in self.lk),
            fr=None if self.fr is None else tuple(-x for x in self.fr),
        )

    def relabeled(self, shift: int) -> "CoverData":
        """Cyclically rename lifts: new lift ``i`` is old lift ``i + shift``."""
        q = self.q
        lk = tuple(tuple(self.lk[(i + shift) % q][(j + shift) % q] for j in range(q)) for i in range(q))
        fr = None if self.fr is None else tuple(self.fr[(i + shift) % q] for i in range(q))
        return replace(self, lk=lk, fr=fr)


def cover_data_from_pattern(pattern: AnyWord, q: int, max_q: Optional[int] = None) -> CoverData:
    if q != 1 and not is_prime_power(q):
        raise InconsistentCoverData(f"q = {q} is not a prime power")
    lifted = lift(pattern, q, max_q)
    return CoverData(
        q=q,
        w=lifted.winding,
        lk=lifted.lk,
        n=1,
        fr=lifted.fr,
        ambient=TrivialS3(),
        provenance=DIAGRAM,
    ).validate()


# -- verdicts ---------------------------------------------------------------------

class Outcome(enum.Enum):
    NOT_HOMOMORPHISM = "not-homomorphism"
    NOT_PSEUDO_HOMOMORPHISM = "not-pseudo-homomorphism"
    INCONCLUSIVE = "inconclusive"


NULLHOM = "null-homologous-lifts"
EXTENDED = "odd-or-dividing-order"
COMPOSITE = "composite-pattern"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ObstructionCertificate:
    q: int
    lens_sum: tuple[int, ...]  # auxiliary lens summands of the surgery description
    c0: Optional[Fraction]  # None when the ambient is only known through its homology
    cobordism: CobordismCertificate
    clasper: ClasperCertificate
    constant: AffineConstant
    bound: ZkBound
    identification: str = "(S3, H_q) * E_K = Sigma_2(C_{2,1}(K)) = S3_{+1}(K # K^r)"
    invariance: str = "null-homologous surgeries preserve linking and framings"

    def verify(self) -> bool:
        n = len(self.cobordism.initial)
        return (
            self.cobordism.verify()
            and self.cobordism.final == hq_matrix(n, *self.cobordism.pair)
            and self.clasper.equivalent
            and self.clasper.source == self.cobordism.final
            and self.bound == zk_bound("k", self.constant)
        )


@dataclass(frozen=True)
class Verdict:
    theorem: str
    outcome: Outcome
    mirrored: bool
    hypotheses: tuple[Hypothesis, ...]
    certificate: Optional[ObstructionCertificate] = None
    notes: tuple[str, ...] = ()

    @property
    def obstructed(self) -> bool:
        return self.outcome is not Outcome.INCONCLUSIVE


def _sign_hypothesis(cd: CoverData) -> tuple[Hypothesis, Optional[bool]]:
    """Returns the hypothesis record and whether to mirror (None if it fails)."""
    off = cd.off_diagonal()
    if any(x > 0 for x in off) and all(x >= 0 for x in off):
        return Hypothesis("linking nonnegative, not identically zero", True), False
    if any(x < 0 for x in off) and all(x <= 0 for x in off):
        return Hypothesis("linking nonnegative, not identically zero", True,
                          "holds for the mirrored pattern"), True
    detail = "linking identically zero" if not any(off) else "linking has mixed signs"
    return Hypothesis("linking nonnegative, not identically zero", False, detail), None


def _degree_hypothesis(cd: CoverData) -> Hypothesis:
    ok = cd.q >= 2
    return Hypothesis("cover degree is a prime power >= 2 dividing w", ok,
                      "" if ok else "degree-1 cover has no pairs of lifts")


def _provenance_notes(cd: CoverData) -> tuple[str, ...]:
    if cd.provenance == DIAGRAM:
        return ("lift data computed from a diagram with the branch locus drawn as an unknotted axis",)
    return ("lift data is user-supplied and trusted after the consistency gate",)


def check_null_homologous(cd: CoverData) -> Verdict:
    cd.validate()
    hyps = [_degree_hypothesis(cd)]
    notes = _provenance_notes(cd)
    if not hyps[0].passed:
        return Verdict(NULLHOM, Outcome.INCONCLUSIVE, False, tuple(hyps), notes=notes)
    if cd.n != 1 or cd.fr is None:
        raise NotNullHomologous(
            f"lifts have order {cd.n} in homology; use check_finite_order"
        )
    hyps.append(Hypothesis("lifts null-homologous", True))
    sign, mirror = _sign_hypothesis(cd)
    hyps.append(sign)
    if mirror is None:
        return Verdict(NULLHOM, Outcome.INCONCLUSIVE, False, tuple(hyps), notes=notes)
    data = cd.mirrored() if mirror else cd
    return Verdict(NULLHOM, Outcome.NOT_HOMOMORPHISM, mirror, tuple(hyps),
                   build_certificate(data), notes)


def check_finite_order(cd: CoverData) -> Verdict:
    cd.validate()
    hyps = [_degree_hypothesis(cd)]
    notes = list(_provenance_notes(cd))
    if not hyps[0].passed:
        return Verdict(EXTENDED, Outcome.INCONCLUSIVE, False, tuple(hyps), notes=tuple(notes))
    odd = cd.n % 2 == 1
    divides = cd.w != 0 and cd.w % cd.n == 0
    hyps.append(Hypothesis(
        "lift order n is odd, or w is a nonzero multiple of n", odd or divides,
        f"n = {cd.n}, w = {cd.w}",
    ))
    sign, mirror = _sign_hypothesis(cd)
    hyps.append(sign)
    if not hyps[1].passed or mirror is None:
        return Verdict(EXTENDED, Outcome.INCONCLUSIVE, False, tuple(hyps), notes=tuple(notes))
    data = cd.mirrored() if mirror else cd
    if cd.n == 1:
        cert = build_certificate(data)
    else:
        # P o Q with Q the (n,1) alternating cable when n is odd, else P o P
        w_r = cd.n if odd else cd.w
        notes.append(
            f"certificate built for the composite with a winding-{w_r} pattern "
            + ("(the (n,1) alternating cable, a pseudo-homomorphism)" if odd else "(P composed with itself)")
        )
        cert = build_certificate(compose_cover_data(data, w_r))
    return Verdict(EXTENDED, Outcome.NOT_HOMOMORPHISM, mirror, tuple(hyps), cert, tuple(notes))


def compose_cover_data(cd: CoverData, w_r: int) -> CoverData:
    """Lift data of ``P o R`` from that of ``P`` and the winding number of ``R``.

    Linking scales by ``w_r**2``, the lift class is multiplied by ``w_r``.
    """
    if w_r == 0:
        raise PreconditionError("the inner pattern must have nonzero winding number")
    sq = w_r * w_r
    n = cd.n // math.gcd(cd.n, w_r)
    lk = tuple(tuple(sq * x for x in r) for r in cd.lk)
    out = replace(cd, lk=lk, n=n, w=cd.w * w_r, fr=None)
    if n == 1:
        out = replace(out, fr=out.expected_framings())
    return out.validate()


def check_composite(cd: CoverData, w_r: int) -> Verdict:
    cd.validate()
    if w_r == 0 or w_r % cd.n:
        raise PreconditionError(
            f"winding number {w_r} of the inner pattern is not a nonzero multiple of n = {cd.n}"
        )
    composed = compose_cover_data(cd, w_r)
    inner = check_null_homologous(composed)
    notes = inner.notes + (
        "conclusion concerns the composite P o R: at least one of P, R is not a homomorphism",
        "pseudo-homomorphism requires P(U) slice; for user data this is a declaration",
    )
    outcome = Outcome.NOT_PSEUDO_HOMOMORPHISM if inner.obstructed else Outcome.INCONCLUSIVE
    hyps = (Hypothesis("inner winding is a nonzero multiple of n", True, f"w_R = {w_r}, n = {cd.n}"),) + inner.hypotheses
    return Verdict(COMPOSITE, outcome, inner.mirrored, hyps, inner.certificate, notes)


def check(cd: CoverData) -> Verdict:
    """Pick the applicable test for the data."""
    return check_null_homologous(cd) if cd.n == 1 else check_finite_order(cd)


# -- certificates -----------------------------------------------------------------

def _c0(ambient: Ambient) -> Optional[Fraction]:
    if isinstance(ambient, TrivialS3):
        return Fraction(0)
    if isinstance(ambient, LensSum):
        return max(abs(d) for d in d_spectrum(ambient.manifold()).values())
    return None


def build_certificate(cd: CoverData) -> ObstructionCertificate:
    """Assemble the four-step chain for data with nonnegative, not identically zero linking."""
    cd.validate()
    if cd.n != 1 or cd.fr is None:
        raise NotNullHomologous("certificates need null-homologous lifts")
    q = cd.q
    lk = [[int(x) for x in r] for r in cd.lk]
    M = framed_matrix(lk, [int(x) for x in cd.fr])
    pair = next(((i, j) for i in range(q) for j in range(i + 1, q) if lk[i][j] >= 1), None)
    if pair is None:
        raise PreconditionError("no pair of lifts with positive linking")
    cob = reduce_to_hopf(M, *pair)
    clasp = clasper_certificate(cob.final, hq_matrix(q, *pair))
    c0 = _c0(cd.ambient)
    if c0 is None:
        constant = AffineConstant(Fraction(0), ("c_0", "c_1", "c_2"))
    else:
        constant = AffineConstant(c0, ("c_1", "c_2"))
    lens = cd.ambient.ms if isinstance(cd.ambient, LensSum) else ()
    return ObstructionCertificate(q, lens, c0, cob, clasp, constant, zk_bound("k", constant))


def zk_test_manifold(k: int) -> SpinCIndexedManifold:
    """Stand-in for Z_k with every constant set to zero.

    The comparison manifold is ``S3_{+1}(T # T) # S3_{+1}(-T # -T)`` with
    ``T = T_{2,2k+1}``; both signatures come from Seifert matrices.
    """
    from .dinv import AlternatingSurgery
    from .diagram import mirror
    from .seifert import signature, torus_knot_2

    t = torus_knot_2(2 * k + 1)
    tt = t.connected_sum(t)
    mm = mirror(tt)
    return SpinCIndexedManifold.of(
        AlternatingSurgery(1, signature(tt), label=f"T(2,{2 * k + 1}) # T(2,{2 * k + 1})"),
        AlternatingSurgery(1, signature(mm), label=f"-T(2,{2 * k + 1}) # -T(2,{2 * k + 1})"),
    )
