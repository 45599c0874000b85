"""Lifting a pattern curve to the q-fold cyclic branched cover over an unknotted axis.

The cover of S^3 branched over the round axis is again S^3, and the preimage
of an annular diagram is the same word read ``q`` times around.  Lift
``eta_1`` is the component containing the first segment of copy 0; lift
``eta_{k+1}`` is its image under ``k`` deck transformations (shift by ``k``
copies).
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    AnnularMorseWord,
    AnyWord,
    BraidWord,
    LinkPresentation,
    annular,
    linking_matrix_of_closure,
    writhe,
)
from .linalg import IntMatrix


class WindingNotDivisible(ValueError):
    pass


class LiftConsistencyError(RuntimeError):
    """The two independent framing computations disagree, or the orbit count is wrong."""


@dataclass(frozen=True)
class LiftedLink:
    q: int
    lk: IntMatrix  # zero diagonal
    fr: tuple[int, ...]
    diagram_fr: tuple[int, ...]  # from self-writhe minus downstairs writhe
    winding: int
    pattern_writhe: int

    @property
    def components(self) -> int:
        return self.q


def lift(pattern: AnyWord, q: int, max_q: int | None = None) -> LiftedLink:
    """Lift the pattern curve ``eta`` to the ``q``-fold cyclic branched cover.

    Framings are taken from the framing identity ``fr_i = -sum_{j != i} lk_ij``
    and checked against the diagram: the blackboard framing of lift ``i``
    minus the blackboard framing of ``eta`` downstairs.
    """
    word = annular(pattern)
    if q < 1:
        raise ValueError("cover degree must be positive")
    if max_q is not None and q > max_q:
        raise ValueError(f"cover degree {q} exceeds the cap {max_q}")
    if not word.is_knot():
        raise ValueError(f"pattern curve has {word.num_components} components, expected 1")
    w = word.winding
    if w % q:
        raise WindingNotDivisible(f"q = {q} does not divide the winding number {w}")

    up = word.repeated(q)
    if up.num_components != q:
        raise LiftConsistencyError(f"lift has {up.num_components} components, expected {q}")
    L = len(word.slices)
    first = word.components()[0][0]
    order = []
    for k in range(q):
        seg = (first[0] + k * L, first[1]) if L else first
        order.append(up.component_of(seg) if L else k)
    if sorted(order) != list(range(q)):
        raise LiftConsistencyError("deck translates of eta_1 do not cover every lift")

    raw = linking_matrix_of_closure(LinkPresentation(up))
    lk = tuple(tuple(raw[order[i]][order[j]] for j in range(q)) for i in range(q))
    down = writhe(word)
    diagram_fr = tuple(writhe(up, order[i]) - down for i in range(q))
    fr = tuple(-sum(lk[i][j] for j in range(q) if j != i) for i in range(q))
    if fr != diagram_fr:
        raise LiftConsistencyError(
            f"framing identity gives {fr} but the diagram gives {diagram_fr}"
        )
    return LiftedLink(q, lk, fr, diagram_fr, w, down)


def framing_lemma_check(lifted: LiftedLink) -> bool:
    q = lifted.q
    return all(
        lifted.fr[i] == -sum(lifted.lk[i][j] for j in range(q) if j != i) for i in range(q)
    )


def is_deck_equivariant(lk) -> bool:
    q = len(lk)
    return all(lk[i][j] == lk[(i + 1) % q][(j + 1) % q] for i in range(q) for j in range(q))


def torus_link(p: int, q: int) -> LinkPresentation:
    """Closure of ``(s_1 ... s_{q-1})^p`` on ``q`` strands."""
    if p < 1 or q < 1:
        raise ValueError("torus link parameters must be positive")
    gens = tuple((i, 1) for i in range(1, q))
    return LinkPresentation.of(BraidWord(q, gens * p))


def cable_pattern(n: int) -> BraidWord:
    """Pattern curve of the (n,1) cable drawn around its unknotted companion axis."""
    return BraidWord(n, tuple((i, 1) for i in range(1, n)))


def alternating_cable_pattern(n: int) -> BraidWord:
    """Pattern curve of the (n,1) alternating cable: prod s_i^((-1)^(i+1))."""
    return BraidWord(n, tuple((i, 1 if i % 2 else -1) for i in range(1, n)))


def whitehead_pattern() -> AnnularMorseWord:
    """Clasp word for the Whitehead pattern curve (winding 0).

    Two antiparallel strands run around the annulus; a cup born between them
    and a cap closing them interlock through two negative crossings.
    """
    from .diagram import Cap, Crossing, Cup

    return AnnularMorseWord(
        (1, -1), (Cup(1, 1), Crossing(0, -1), Crossing(2, -1), Cap(1))
    )
