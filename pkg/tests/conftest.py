from hypothesis import strategies as st

from satobs.diagram import BraidWord, annular, commute, r1_insert, r2_insert, zigzag_insert

_RESULTS = []


def record(line: str) -> None:
    _RESULTS.append(line)


def pytest_terminal_summary(terminalreporter):
    if _RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in _RESULTS:
            terminalreporter.write_line(line)


@st.composite
def braid_words(draw, min_strands=1, max_strands=4, max_len=8):
    m = draw(st.integers(min_strands, max_strands))
    if m == 1:
        return BraidWord(1)
    letters = draw(st.lists(
        st.tuples(st.integers(1, m - 1), st.sampled_from((1, -1))), max_size=max_len))
    return BraidWord(m, tuple(letters))


def _strands_before(word, pos):
    return word.orientations if pos == len(word.slices) else word.boundaries[pos]


@st.composite
def isotopic_rewrites(draw, word, steps=4, allow_r1=False):
    """Apply random planar isotopies (R2, far commutation, zigzags, optionally R1) to ``word``.

    Returns the rewritten word and the expected change in writhe.
    """
    a = annular(word)
    dw = 0
    ops = ["r2", "zigzag", "commute"] + (["r1"] if allow_r1 else [])
    for _ in range(draw(st.integers(1, steps))):
        op = draw(st.sampled_from(ops))
        pos = draw(st.integers(0, len(a.slices)))
        strands = _strands_before(a, pos)
        if op == "r2" and len(strands) >= 2:
            a = r2_insert(a, pos, draw(st.integers(0, len(strands) - 2)), draw(st.sampled_from((1, -1))))
        elif op == "zigzag" and strands:
            a = zigzag_insert(a, pos, draw(st.integers(0, len(strands) - 1)))
        elif op == "r1" and strands:
            gen = draw(st.sampled_from((1, -1)))
            a = r1_insert(a, pos, draw(st.integers(0, len(strands) - 1)), gen)
            dw -= gen
        elif op == "commute":
            cands = [k for k in range(len(a.slices) - 1) if _commutes(a.slices[k], a.slices[k + 1])]
            if cands:
                a = commute(a, draw(st.sampled_from(cands)))
    return a, dw


def _commutes(x, y):
    from satobs.diagram import Crossing
    return isinstance(x, Crossing) and isinstance(y, Crossing) and abs(x.i - y.i) >= 2


@st.composite
def knot_braids(draw, min_strands=1, max_strands=4, max_len=8):
    """Random braid words whose closure is a knot.

    Appending s_i with strands i, i+1 in different cycles of the permutation
    merges those cycles, so the loop terminates with a single cycle.
    """
    b = draw(braid_words(min_strands, max_strands, max_len))
    while not annular(b).is_knot():
        perm = b.permutation()
        cycle = _cycle_labels(perm)
        i = next(k for k in range(b.strands - 1) if cycle[k] != cycle[k + 1])
        b = BraidWord(b.strands, b.letters + ((i + 1, draw(st.sampled_from((1, -1)))),))
    return b


def _cycle_labels(perm):
    label = [-1] * len(perm)
    for start in range(len(perm)):
        x = start
        while label[x] < 0:
            label[x] = start
            x = perm[x]
    return label
