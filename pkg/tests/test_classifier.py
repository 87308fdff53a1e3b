import json

import jsonschema
import pytest
from conftest import words
from hypothesis import given, settings
from hypothesis import strategies as st

from wordmaps.classifier import (
    PSL2_ORDER,
    REPORT_SCHEMA,
    SL2_ORDER,
    AnalysisOptions,
    analyze,
    render_report,
)
from wordmaps.words import Word, cyclic_shift, parse_word, swap_generators

GOLDEN = parse_word("[y x y^-1, x^-1]")
V = parse_word("[[x,[x,y]],[y,[x,y]]]")


def _valid(report):
    jsonschema.validate(json.loads(render_report(report, "json")), REPORT_SCHEMA)


def _verdicts(r):
    return (r.psl2_verdict, r.sl2_verdict, r.minus_id != "Unknown")


def test_power_rule_example():
    r = analyze(parse_word("x^2 y"))
    assert r.psl2_verdict == "Surjective"
    cert = r.criterion("power_rule").certificate
    assert cert["generator"] == 2 and cert["exponent"] == 1
    assert cert["specialization"] == "w(id, g2) = g2^1"
    _valid(r)


def test_commutator_example():
    r = analyze(parse_word("[x,y]"))
    assert r.psl2_verdict == "Surjective" and r.minus_id == "InImage(2)"
    assert any(c["kind"] == "theorem_1_3" for c in r.certificates)
    js = render_report(r, "json")
    assert '"psl2_verdict":"Surjective"' in js and "theorem_1_3" in js
    _valid(r)


def test_second_derived_example():
    r = analyze(V)
    assert r.derived_level == "InF2"
    assert (r.psl2_verdict, r.sl2_verdict, r.minus_id) == ("Unknown", "Unknown", "Unknown")
    assert any("verify-paper" in n for n in r.notes)
    _valid(r)


def test_identity_word():
    r = analyze(Word.identity(2))
    assert all(not c.applicable for c in r.criteria)
    assert (r.psl2_verdict, r.sl2_verdict, r.minus_id) == ("Unknown", "Unknown", "Unknown")
    _valid(r)


def test_golden_with_big():
    r = analyze(GOLDEN, AnalysisOptions(big_samples=(1,)))
    assert r.criterion("big").outcome == "AlmostSurjective"
    assert r.minus_id.startswith("InImage")
    assert r.sl2_verdict == "Surjective" and r.psl2_verdict == "Surjective"
    _valid(r)


def test_three_generators():
    r = analyze(parse_word("[g1,g2] g3^2"))
    assert r.num_generators == 3 and r.psl2_verdict == "Surjective"
    r = analyze(parse_word("[[g1,g2],g3]"))
    assert r.derived_level == "InF1NotF2" and r.psl2_verdict == "Surjective"
    _valid(r)


def test_text_rendering_is_deterministic():
    a = render_report(analyze(parse_word("x^2 y^3")), "text")
    b = render_report(analyze(parse_word("x^2 y^3")), "text")
    assert a == b and "SL(2) verdict" in a
    with pytest.raises(ValueError):
        render_report(analyze(parse_word("x")), "xml")


def test_ff_disclaimer_path():
    # [x,y] is surjective on PSL(2, C) by the derived-level criterion, yet misses part of SL(2, 3)
    r = analyze(parse_word("[x,y]"), AnalysisOptions(do_ff=True, prime=3, projective=False))
    ff = r.criterion("ff_image")
    assert ff.applicable and r.criterion("theorem_1_3").applicable
    assert r.psl2_verdict == "Surjective" and not ff.certificate["surjective"]
    assert "proper although" in ff.note
    assert ff.certificate["disclaimer"] in ff.note


@settings(max_examples=40)
@given(words(2, 6))
def test_schema_and_consistency(w):
    r = analyze(w)
    _valid(r)
    if r.sl2_verdict == "Surjective":
        assert r.psl2_verdict == "Surjective"
    if r.psl2_verdict != "Unknown" or r.sl2_verdict != "Unknown" or r.minus_id != "Unknown":
        assert r.certificates


@settings(max_examples=15)
@given(words(2, 5).filter(lambda w: not w.is_identity()))
def test_monotone_in_criteria(w):
    base = analyze(w)
    more = analyze(w, AnalysisOptions(big_samples=(1, 2)))
    assert PSL2_ORDER.index(more.psl2_verdict) >= PSL2_ORDER.index(base.psl2_verdict)
    assert SL2_ORDER.index(more.sl2_verdict) >= SL2_ORDER.index(base.sl2_verdict)
    assert base.minus_id == "Unknown" or more.minus_id != "Unknown"


@settings(max_examples=50)
@given(words(2, 6).filter(lambda w: not w.is_identity()), st.integers(0, 12))
def test_transform_invariance(w, k):
    ref = _verdicts(analyze(w))
    for other in (cyclic_shift(w, k), w.inverse(), swap_generators(w)):
        assert _verdicts(analyze(other)) == ref
