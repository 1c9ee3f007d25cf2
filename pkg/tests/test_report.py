import pytest

from cubicpoisson import CurveType, analyze, annihilator, normal_form, parse
from cubicpoisson.lie import center, is_abelian, is_solvable, radical
from cubicpoisson.poisson import Mode
from cubicpoisson.report import (
    NOTE_CONCURRENT_LINES,
    NOTE_H1,
    NOTE_MODES_DISAGREE,
    NOTE_TRIANGLE_EXISTENCE,
    OBSTRUCTED,
    NOT_OBSTRUCTED,
    modes_from_flag,
)
from oracles import random_invertible, sympy_annihilator_dim

STRICT_OBSTRUCTED = {CurveType.DOUBLE_LINE_PLUS_LINE, CurveType.TRIPLE_LINE}
DIVISOR_OBSTRUCTED = {CurveType.CONIC_LINE_TANGENT, CurveType.THREE_LINES_CONCURRENT,
                      CurveType.DOUBLE_LINE_PLUS_LINE, CurveType.TRIPLE_LINE}


@pytest.mark.parametrize("t", list(CurveType))
def test_verdicts_per_mode(t):
    report = analyze(normal_form(t))
    assert report.curve_type is t
    assert report.obstruction["strict"] == (OBSTRUCTED if t in STRICT_OBSTRUCTED else NOT_OBSTRUCTED)
    assert report.obstruction["divisor"] == (OBSTRUCTED if t in DIVISOR_OBSTRUCTED else NOT_OBSTRUCTED)
    assert NOTE_H1 in report.annotations
    assert (NOTE_MODES_DISAGREE in report.annotations) == (not report.modes_agree)


def test_obstruction_iff_not_reductive():
    for t in CurveType:
        for m in analyze(normal_form(t)).modes:
            assert (m.obstruction == OBSTRUCTED) == (not m.is_reductive)


def test_conic_and_tangent_line_divisor_algebra(rng):
    # the curve-preserving algebra of a conic with a tangent line is a 2-dim
    # nonabelian (Borel) algebra, so it is not reductive on every representative
    for text in ["(z1 - z2)*(z0^2 + z1^2 - z2^2)", "z2*(z0^2 - z1*z2)"]:
        f = parse(text, 3)
        for h in [None, random_invertible(rng)]:
            g_f = f if h is None else f.apply_transform(h)
            g = annihilator(g_f, Mode.DIVISOR)
            assert g.dim == 2 == sympy_annihilator_dim(g_f, divisor=True)
            assert not is_abelian(g) and is_solvable(g)
            assert radical(g).dim == 2 and center(g).dim == 0
            strict = annihilator(g_f, Mode.STRICT)
            assert strict.dim == 1


def test_annotations():
    assert NOTE_CONCURRENT_LINES in analyze("z0*z1*(z0+z1)").annotations
    assert NOTE_CONCURRENT_LINES not in analyze("z0*z1*(z0+z1)", ["divisor"]).annotations
    assert NOTE_TRIANGLE_EXISTENCE in analyze("z0*z1*z2").annotations
    assert analyze("z0^3").annotations == (NOTE_H1,)


def test_mode_selection():
    assert [m.mode for m in analyze("z0^3", ["divisor", "divisor"]).modes] == [Mode.DIVISOR]
    assert modes_from_flag("both") == (Mode.STRICT, Mode.DIVISOR)
    with pytest.raises(ValueError):
        analyze("z0^3", [])
    with pytest.raises(KeyError):
        analyze("z0^3", ["strict"]).mode("divisor")


def test_report_is_canonical_under_rewriting():
    a = analyze("z0*z1*(z0+z1)").to_dict()
    b = analyze("z1^2*z0 + z0^2*z1").to_dict()
    assert a == b
    assert a["input"] == "z0^2*z1 + z0*z1^2"


def test_text_and_json_carry_same_facts():
    report = analyze("z0^2*z1")
    text, data = report.to_text(), report.to_dict()
    assert data["curve_type"] in text
    for mode, block in data["modes"].items():
        assert f"[{mode}] dimension {block['dimension']}" in text
        assert f"obstruction: {block['obstruction']}" in text
