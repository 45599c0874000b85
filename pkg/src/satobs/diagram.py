"""Braid words and annular Morse words, their closures and diagram invariants.

An annular word describes a curve in a thickened annulus: the angular
coordinate plays the role of time, each slice is a crossing between adjacent
strands, a cap (two adjacent strands end) or a cup (two adjacent strands are
born), and the last slice is glued back to the first.  Braid closures are the
special case with no caps or cups and every strand pointing forward.

Conventions: strand positions in the text grammar are 1-based; everything in
Python is 0-based.  A crossing letter records the braid generator type
(``+1`` for sigma_i, ``-1`` for its inverse).  The oriented crossing sign is
``generator * o_left * o_right`` where ``o`` are the angular directions
(``+1`` forward, ``-1`` backward) of the two strands entering the crossing,
so sigma_i between two forward strands is a right-handed (+1) crossing.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Union

from .linalg import IntMatrix


class WordError(ValueError):
    """Raised for malformed or non-planar words."""


@dataclass(frozen=True)
class Crossing:
    i: int  # left strand position, 0-based
    gen: int  # +1 sigma_i, -1 sigma_i^-1

    def __str__(self):
        return f"x({self.i + 1},{'+' if self.gen > 0 else '-'})"


@dataclass(frozen=True)
class Cap:
    i: int

    def __str__(self):
        return f"cap({self.i + 1})"


@dataclass(frozen=True)
class Cup:
    i: int
    orient: int  # direction of the new strand at position i; i+1 gets the opposite

    def __str__(self):
        return f"cup({self.i + 1},{'+' if self.orient > 0 else '-'})"


Slice = Union[Crossing, Cap, Cup]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()  # (generator index 1..m-1, sign)

    def __post_init__(self):
        if self.strands < 1:
            raise WordError("a braid needs at least one strand")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise WordError(f"generator s{i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise WordError(f"bad sign {s}")

    @classmethod
    def from_ints(cls, strands: int, word) -> "BraidWord":
        """``[1, -2, 1]`` style words: ``k`` is sigma_k, ``-k`` its inverse."""
        return cls(strands, tuple((abs(g), 1 if g > 0 else -1) for g in word))

    def permutation(self) -> tuple[int, ...]:
        """Image of each starting strand position after the whole word."""
        pos = list(range(self.strands))  # pos[p] = strand now at position p
        for i, _ in self.letters:
            pos[i - 1], pos[i] = pos[i], pos[i - 1]
        perm = [0] * self.strands
        for p, s in enumerate(pos):
            perm[s] = p
        return tuple(perm)

    def to_annular(self) -> "AnnularMorseWord":
        return AnnularMorseWord(
            (1,) * self.strands, tuple(Crossing(i - 1, s) for i, s in self.letters)
        )

    def connected_sum(self, other: "BraidWord") -> "BraidWord":
        shift = self.strands - 1
        return BraidWord(
            self.strands + other.strands - 1,
            self.letters + tuple((i + shift, s) for i, s in other.letters),
        )

    def power(self, k: int) -> "BraidWord":
        if k < 0:
            inv = tuple((i, -s) for i, s in reversed(self.letters))
            return BraidWord(self.strands, inv * (-k))
        return BraidWord(self.strands, self.letters * k)

    def __str__(self):
        body = " ".join(f"s{i}" if s > 0 else f"S{i}" for i, s in self.letters)
        return f"B[{self.strands}]: {body}".rstrip()


@dataclass(frozen=True)
class _Closure:
    components: tuple[tuple[tuple[int, int], ...], ...]  # segments (boundary, position)
    component_of: dict
    crossings: tuple[tuple[int, int, int, int], ...]  # (slice, comp_left, comp_right, sign)


@dataclass(frozen=True)
class AnnularMorseWord:
    """A cyclic Morse word.  ``orientations`` lists strand directions at slice 0."""

    orientations: tuple[int, ...]
    slices: tuple[Slice, ...] = ()
    boundaries: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        cur = tuple(self.orientations)
        if any(o not in (1, -1) for o in cur):
            raise WordError("orientations must be +1 or -1")
        seen = [cur]
        for k, s in enumerate(self.slices):
            n = len(cur)
            if isinstance(s, Crossing):
                if not 0 <= s.i < n - 1 or s.gen not in (1, -1):
                    raise WordError(f"slice {k}: {s} invalid on {n} strands")
                cur = cur[: s.i] + (cur[s.i + 1], cur[s.i]) + cur[s.i + 2:]
            elif isinstance(s, Cap):
                if not 0 <= s.i < n - 1:
                    raise WordError(f"slice {k}: {s} invalid on {n} strands")
                if cur[s.i] == cur[s.i + 1]:
                    raise WordError(f"slice {k}: {s} joins two strands of the same direction")
                cur = cur[: s.i] + cur[s.i + 2:]
            elif isinstance(s, Cup):
                if not 0 <= s.i <= n or s.orient not in (1, -1):
                    raise WordError(f"slice {k}: {s} invalid on {n} strands")
                cur = cur[: s.i] + (s.orient, -s.orient) + cur[s.i:]
            else:
                raise WordError(f"unknown slice {s!r}")
            seen.append(cur)
        if cur != tuple(self.orientations):
            raise WordError(
                f"word does not close up: starts with {len(self.orientations)} strands "
                f"{_fmt_orient(self.orientations)}, ends with {len(cur)} {_fmt_orient(cur)}"
            )
        object.__setattr__(self, "orientations", tuple(self.orientations))
        object.__setattr__(self, "boundaries", tuple(seen[:-1]) if self.slices else (cur,))

    # -- structure ---------------------------------------------------------

    @property
    def winding(self) -> int:
        return sum(self.orientations)

    def strand_counts(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.boundaries)

    def repeated(self, q: int) -> "AnnularMorseWord":
        return AnnularMorseWord(self.orientations, self.slices * q)

    @cached_property
    def _closure(self) -> _Closure:
        return _close(self)

    def components(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        return self._closure.components

    def component_of(self, segment: tuple[int, int]) -> int:
        return self._closure.component_of[segment]

    @property
    def num_components(self) -> int:
        return len(self._closure.components)

    def is_knot(self) -> bool:
        return self.num_components == 1

    def crossings(self):
        """``(slice index, left component, right component, oriented sign)`` per crossing."""
        return self._closure.crossings

    def component_winding(self, c: int) -> int:
        return sum(self.boundaries[0][p] for b, p in self._closure.components[c] if b == 0)

    def __str__(self):
        body = " ".join(str(s) for s in self.slices)
        return f"A[{_fmt_orient(self.orientations)}]: {body}".rstrip()


def _fmt_orient(o) -> str:
    return "".join("+" if x > 0 else "-" for x in o)


def _close(word: AnnularMorseWord) -> _Closure:
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra

    bounds = word.boundaries
    for k, b in enumerate(bounds):
        for p in range(len(b)):
            parent[(k, p)] = (k, p)
    nb = len(bounds)
    for k, s in enumerate(word.slices):
        nk = (k + 1) % nb
        n = len(bounds[k])
        if isinstance(s, Crossing):
            for p in range(n):
                q = s.i + 1 if p == s.i else s.i if p == s.i + 1 else p
                union((k, p), (nk, q))
        elif isinstance(s, Cap):
            union((k, s.i), (k, s.i + 1))
            for p in range(n):
                if p < s.i:
                    union((k, p), (nk, p))
                elif p > s.i + 1:
                    union((k, p), (nk, p - 2))
        else:
            union((nk, s.i), (nk, s.i + 1))
            for p in range(n):
                union((k, p), (nk, p if p < s.i else p + 2))

    groups: dict = {}
    for seg in sorted(parent):
        groups.setdefault(find(seg), []).append(seg)
    comps = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
    comp_of = {seg: c for c, g in enumerate(comps) for seg in g}
    crossings = []
    for k, s in enumerate(word.slices):
        if isinstance(s, Crossing):
            o = bounds[k]
            sign = s.gen * o[s.i] * o[s.i + 1]
            crossings.append((k, comp_of[(k, s.i)], comp_of[(k, s.i + 1)], sign))
    return _Closure(tuple(comps), comp_of, tuple(crossings))


AnyWord = Union[BraidWord, AnnularMorseWord]


def annular(word: AnyWord) -> AnnularMorseWord:
    return word.to_annular() if isinstance(word, BraidWord) else word


# -- operations ----------------------------------------------------------------

def closure_components(word: AnyWord) -> tuple[tuple[int, ...], ...]:
    """Components of the closure, each given by the slice-0 strand positions it passes.

    Components are numbered by their smallest segment, so those meeting slice 0
    come first, ordered by strand position.  For braids this is the orbit
    decomposition of the permutation.
    """
    a = annular(word)
    return tuple(tuple(p for b, p in comp if b == 0) for comp in a.components())


@dataclass(frozen=True)
class LinkPresentation:
    word: AnnularMorseWord

    @classmethod
    def of(cls, word: AnyWord) -> "LinkPresentation":
        return cls(annular(word))

    @property
    def components(self):
        return closure_components(self.word)

    @property
    def num_components(self) -> int:
        return self.word.num_components


def linking_matrix_of_closure(pres: Union[LinkPresentation, AnyWord]) -> IntMatrix:
    """Pairwise linking numbers of the closure components (zero diagonal)."""
    word = pres.word if isinstance(pres, LinkPresentation) else annular(pres)
    n = word.num_components
    twice = [[0] * n for _ in range(n)]
    for _, a, b, sign in word.crossings():
        if a != b:
            twice[a][b] += sign
            twice[b][a] += sign
    return tuple(tuple(x // 2 for x in row) for row in twice)


def writhe(word: AnyWord, component: Optional[int] = None) -> int:
    """Signed crossing count, of the whole diagram or of one component's self-crossings."""
    a = annular(word)
    if component is None:
        return sum(sign for *_, sign in a.crossings())
    if not 0 <= component < a.num_components:
        raise ValueError(f"no component {component}; diagram has {a.num_components}")
    return sum(sign for _, c1, c2, sign in a.crossings() if c1 == c2 == component)


def mirror(word: AnyWord) -> AnyWord:
    if isinstance(word, BraidWord):
        return BraidWord(word.strands, tuple((i, -s) for i, s in word.letters))
    return AnnularMorseWord(
        word.orientations,
        tuple(Crossing(s.i, -s.gen) if isinstance(s, Crossing) else s for s in word.slices),
    )


def winding(word: AnyWord) -> int:
    return annular(word).winding


# -- local rewrites (isotopies of the annular diagram, plus R1) -----------------

def _insert(word: AnnularMorseWord, pos: int, new) -> AnnularMorseWord:
    if not 0 <= pos <= len(word.slices):
        raise ValueError(f"slice position {pos} out of range")
    s = word.slices
    if pos == 0:
        # inserting before slice 0 would change the base orientations; append instead
        return AnnularMorseWord(word.orientations, s + tuple(new))
    return AnnularMorseWord(word.orientations, s[:pos] + tuple(new) + s[pos:])


def _strands_at(word: AnnularMorseWord, pos: int) -> tuple[int, ...]:
    if pos == len(word.slices) or not word.slices:
        return word.orientations
    return word.boundaries[pos]


def r2_insert(word: AnyWord, pos: int, i: int, gen: int = 1) -> AnnularMorseWord:
    """Insert ``x(i, gen) x(i, -gen)`` before slice ``pos``."""
    a = annular(word)
    if not 0 <= i < len(_strands_at(a, pos)) - 1:
        raise ValueError("R2 needs two strands at the chosen position")
    return _insert(a, pos, (Crossing(i, gen), Crossing(i, -gen)))


def r2_delete(word: AnyWord, pos: int) -> AnnularMorseWord:
    a = annular(word)
    s = a.slices
    x, y = s[pos], s[pos + 1]
    if not (isinstance(x, Crossing) and isinstance(y, Crossing) and x.i == y.i and x.gen == -y.gen):
        raise ValueError(f"slices {pos}, {pos + 1} are not an R2 pair")
    return AnnularMorseWord(a.orientations, s[:pos] + s[pos + 2:])


def commute(word: AnyWord, pos: int) -> AnnularMorseWord:
    """Swap two adjacent crossing slices acting on disjoint strand pairs."""
    a = annular(word)
    s = a.slices
    x, y = s[pos], s[pos + 1]
    if not (isinstance(x, Crossing) and isinstance(y, Crossing) and abs(x.i - y.i) >= 2):
        raise ValueError(f"slices {pos}, {pos + 1} do not commute")
    return AnnularMorseWord(a.orientations, s[:pos] + (y, x) + s[pos + 2:])


def zigzag_insert(word: AnyWord, pos: int, i: int) -> AnnularMorseWord:
    """Insert a cancelling cup/cap pair (a planar zigzag) on strand ``i``."""
    a = annular(word)
    o = _strands_at(a, pos)
    if not 0 <= i < len(o):
        raise ValueError("no strand to zigzag")
    return _insert(a, pos, (Cup(i + 1, -o[i]), Cap(i)))


def r1_insert(word: AnyWord, pos: int, i: int, gen: int = 1) -> AnnularMorseWord:
    """Add a kink to strand ``i``; the writhe changes by ``-gen``."""
    a = annular(word)
    o = _strands_at(a, pos)
    if not 0 <= i < len(o):
        raise ValueError("no strand to kink")
    return _insert(a, pos, (Cup(i + 1, -o[i]), Crossing(i, gen), Cap(i)))


# -- text grammar ----------------------------------------------------------------

_BRAID_RE = re.compile(r"^\s*B\s*\[\s*(\d+)\s*\]\s*:(.*)$", re.S)
_ANNULAR_RE = re.compile(r"^\s*A\s*\[([+\-\s]*)\]\s*:(.*)$", re.S)
_LETTER_RE = re.compile(r"^(s|S)(\d+)(\^-1)?$")
_SLICE_RE = re.compile(r"(x|cap|cup)\(\s*(\d+)\s*(?:,\s*([+-])\s*)?\)")


def parse_word(text: str) -> AnyWord:
    """Parse ``B[m]: s1 S2 s1^-1`` or ``A[+-]: cup(2,+) x(1,-) cap(2)``."""
    m = _BRAID_RE.match(text)
    if m:
        letters = []
        for tok in m.group(2).split():
            lm = _LETTER_RE.match(tok)
            if not lm:
                raise WordError(f"bad braid letter {tok!r}")
            sign = -1 if (lm.group(1) == "S") != bool(lm.group(3)) else 1
            letters.append((int(lm.group(2)), sign))
        return BraidWord(int(m.group(1)), tuple(letters))
    m = _ANNULAR_RE.match(text)
    if m:
        orient = tuple(1 if c == "+" else -1 for c in m.group(1) if c in "+-")
        body = m.group(2).strip()
        slices = []
        pos = 0
        for sm in _SLICE_RE.finditer(body):
            if body[pos: sm.start()].strip():
                raise WordError(f"unexpected text {body[pos:sm.start()].strip()!r}")
            pos = sm.end()
            kind, idx, sign = sm.group(1), int(sm.group(2)) - 1, sm.group(3)
            if idx < 0:
                raise WordError("strand positions are 1-based")
            if kind == "cap":
                if sign:
                    raise WordError("cap takes no orientation")
                slices.append(Cap(idx))
            elif sign is None:
                raise WordError(f"{kind}({idx + 1}) needs a sign, e.g. {kind}({idx + 1},+)")
            elif kind == "x":
                slices.append(Crossing(idx, 1 if sign == "+" else -1))
            else:
                slices.append(Cup(idx, 1 if sign == "+" else -1))
        if body[pos:].strip():
            raise WordError(f"unexpected text {body[pos:].strip()!r}")
        return AnnularMorseWord(orient, tuple(slices))
    raise WordError(f"cannot parse word {text!r}")
