from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satobs.corpus import Pattern, analyze, analyze_corpus
from satobs.covering import cable_pattern
from satobs.pipeline import CoverData, LensSum, UserSupplied
from satobs.report import (
    ReportFormatError,
    cover_data_from_dict,
    cover_data_to_dict,
    emit,
    emit_many,
    parse,
    parse_many,
    render_text,
)


def test_corpus_roundtrip():
    reports = analyze_corpus()
    for r in reports:
        assert parse(emit(r)) == r
    assert parse_many(emit_many(reports)) == reports


def test_user_data_roundtrip():
    third = Fraction(2, 3)
    lk = tuple(tuple(0 if i == j else third for j in range(3)) for i in range(3))
    cd = CoverData(3, 3, lk, n=3, ambient=UserSupplied((3,)))
    r = analyze(Pattern("user", cable_pattern(3), cover_data={3: cd}))
    text = emit(r)
    assert '"2/3"' in text
    assert "0.6" not in text
    assert parse(text) == r
    assert "user-supplied" in render_text(r)


pair_lk = st.integers(0, 5)


@given(st.sampled_from([3, 5, 7]), st.integers(1, 6), st.lists(st.sampled_from([3, -3, 9]), min_size=1, max_size=2))
@settings(max_examples=30, deadline=None)
def test_cover_data_dict_roundtrip(q, x, ms):
    lk = tuple(tuple(0 if i == j else x for j in range(q)) for i in range(q))
    cd = CoverData(q, q, lk, fr=tuple(-(q - 1) * x for _ in range(q)), ambient=LensSum(tuple(ms)))
    assert cover_data_from_dict(cover_data_to_dict(cd)) == cd


def test_bad_inputs():
    with pytest.raises(ReportFormatError):
        parse("{not json")
    with pytest.raises(ReportFormatError):
        parse('{"schema": "other/9"}')
    with pytest.raises(ReportFormatError):
        cover_data_from_dict({"q": 2, "lk": [["0", "1.5x"]]})
    with pytest.raises(ReportFormatError):
        cover_data_from_dict({"q": 2, "w": 2, "lk": [[0, 1], [1, 0]], "ambient": {"type": "torus"}})


def test_text_render():
    r = analyze(Pattern("c2", cable_pattern(2)))
    txt = render_text(r)
    assert "lk = [0 1; 1 0]" in txt and "fr = (-1, -1)" in txt
    assert "not-homomorphism" in txt
