"""Built-in patterns and test knots, and per-pattern analysis."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .covering import (
    alternating_cable_pattern,
    cable_pattern,
    whitehead_pattern,
)
from .diagram import AnyWord, BraidWord, annular
from .pipeline import (
    CoverData,
    InconsistentCoverData,
    Outcome,
    PreconditionError,
    Verdict,
    check,
    check_composite,
    cover_data_from_pattern,
)
from .seifert import is_prime_power, torus_knot_2

DEFAULT_MAX_Q = 7
AXIS_NOTE = (
    "pattern ingested in unknotted-axis position (branch locus drawn as the round axis); "
    "this normal form is a restriction of this tool"
)


@dataclass(frozen=True)
class Pattern:
    name: str
    word: AnyWord
    declared_slice_unknot: bool = True
    cover_data: dict = field(default_factory=dict, hash=False, compare=False)  # q -> CoverData
    inner: Optional["Pattern"] = None  # composite P o R: this is P, ``inner`` is R
    description: str = ""

    @property
    def winding(self) -> int:
        w = annular(self.word).winding
        return w * self.inner.winding if self.inner else w


@dataclass(frozen=True)
class ReportEntry:
    q: int
    cover_data: CoverData
    verdict: Verdict


@dataclass(frozen=True)
class Report:
    pattern: str
    word: str
    winding: int
    declared_slice_unknot: bool
    entries: tuple[ReportEntry, ...]
    outcome: Outcome
    notes: tuple[str, ...] = ()


def _c(n: int) -> Pattern:
    return Pattern(f"cable-{n}-1", cable_pattern(n), description=f"({n},1) cable")


def _a(n: int) -> Pattern:
    return Pattern(f"alt-cable-{n}", alternating_cable_pattern(n),
                   description=f"({n},1) alternating cable")


def builtin_patterns() -> dict[str, Pattern]:
    pats = [
        Pattern("whitehead", whitehead_pattern(), description="positive Whitehead double"),
        Pattern("unknot-pattern", BraidWord(1), description="core of the solid torus (identity)"),
        *(_c(n) for n in range(2, 7)),
        _a(3),
        _a(5),
    ]
    out = {p.name: p for p in pats}
    out["cable-2-1-o-alt-cable-3"] = Pattern(
        "cable-2-1-o-alt-cable-3", out["cable-2-1"].word, inner=out["alt-cable-3"],
        description="(2,1) cable composed with the 3-strand alternating cable",
    )
    return out


def builtin_knots() -> dict[str, BraidWord]:
    """Companion and test knots as braid words."""
    knots = {
        "unknot": BraidWord(1),
        "figure-eight": BraidWord.from_ints(3, [1, -2, 1, -2]),
        "5_2": BraidWord.from_ints(3, [1, 1, 1, 2, -1, 2]),
        "6_1": BraidWord.from_ints(4, [1, 1, 2, -1, -3, 2, -3]),
        "T(3,4)": BraidWord.from_ints(3, [1, 2] * 4),
        "T(3,5)": BraidWord.from_ints(3, [1, 2] * 5),
    }
    for k in range(1, 6):
        t = torus_knot_2(2 * k + 1)
        knots[f"T(2,{2 * k + 1})"] = t
        knots[f"T(2,{2 * k + 1})#T(2,{2 * k + 1})"] = t.connected_sum(t)
    return knots


def admissible_qs(w: int, max_q: int) -> list[int]:
    return [q for q in range(2, max_q + 1) if is_prime_power(q) and w % q == 0]


def analyze(pattern: Pattern, qs: Optional[Iterable[int]] = None,
            max_q: int = DEFAULT_MAX_Q) -> Report:
    """Run the applicable test at every requested (or every admissible) prime power q."""
    outer_w = annular(pattern.word).winding
    allowed = admissible_qs(outer_w, max_q)
    if qs is None:
        qs = allowed
    else:
        qs = sorted(set(qs))
        bad = [q for q in qs if q not in allowed]
        if bad:
            raise InconsistentCoverData(
                f"q = {bad} inadmissible: need prime powers <= {max_q} dividing w = {outer_w}"
            )
    entries = []
    notes = []
    for q in qs:
        cd = pattern.cover_data.get(q)
        if cd is None:
            cd = cover_data_from_pattern(pattern.word, q, max_q)
        elif cd.w != outer_w:
            raise InconsistentCoverData(f"supplied w = {cd.w} but the word has winding {outer_w}")
        if pattern.inner is not None:
            w_r = pattern.inner.winding
            try:
                verdict = check_composite(cd, w_r)
            except PreconditionError as e:
                notes.append(f"q = {q}: {e}")
                continue
        else:
            verdict = check(cd)
        entries.append(ReportEntry(q, cd, verdict))
    if not qs:
        notes.append("no admissible prime-power q > 1 divides the winding number")
    if any(e.cover_data.provenance == "diagram-computed" for e in entries):
        notes.append(AXIS_NOTE)
    if not pattern.declared_slice_unknot:
        notes.append("P(U) not declared slice; pseudo-homomorphism conclusions do not apply")
    negative = [e.verdict.outcome for e in entries if e.verdict.obstructed]
    outcome = negative[0] if negative else Outcome.INCONCLUSIVE
    return Report(
        pattern.name,
        _word_text(pattern),
        pattern.winding,
        pattern.declared_slice_unknot,
        tuple(entries),
        outcome,
        tuple(notes),
    )


def _word_text(p: Pattern) -> str:
    s = str(p.word)
    return f"{s} o {_word_text(p.inner)}" if p.inner else s


def analyze_corpus(max_q: int = DEFAULT_MAX_Q, workers: int = 4) -> list[Report]:
    pats = [builtin_patterns()[k] for k in sorted(builtin_patterns())]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: analyze(p, max_q=max_q), pats))
