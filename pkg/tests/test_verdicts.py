import pytest
from hypothesis import given, settings

from helpers import ctx_of, ideal, ideals
from specgraph import (
    DomainError,
    InvariantError,
    analyze_Hc,
    analyze_ideal_transform,
    analyze_punctured,
    analyze_top_cohomology,
    build_report,
    endomorphism_report,
    height,
    ideal_sum,
    ideal_top,
    intersect,
    split_Hc,
    unit_ideal,
    zero_ideal,
)
from specgraph.verdicts import CITATIONS, separation_holds

C4 = ctx_of("xyzw")
C3 = ctx_of("xyz")
C2 = ctx_of("xy")
CONE = ideal(C4, "(x*z, x*w, y*z, y*w)")


def strs(ideals_):
    return [str(i) for i in ideals_]


def test_analyze_Hc():
    v = analyze_Hc(CONE)
    assert v.result is False
    assert v.statement == "H^2_I(R) is decomposable"
    assert len(v.certificate.components) == 2
    assert v.consequences[0].claim == "Hc-splitting"

    v = analyze_Hc(ideal(C3, "(y, x*z)"))
    assert v.result is True and v.statement == "H^2_I(R) is indecomposable"

    v = analyze_Hc(ideal(C3, "(x)"))
    assert v.result is True and len(v.graph.vertices) == 1


def test_analyze_Hc_mixed_records_reduction():
    v = analyze_Hc(ideal(C3, "(x*y, x*z)"))
    assert v.side_data["I_d"] == ideal(C3, "(x)")
    assert v.side_data["reduction"] == {"ht_lower_ok": True, "ht_sum_ok": True}


def test_analyze_Hc_rejects():
    with pytest.raises(DomainError):
        analyze_Hc(zero_ideal(C3))
    with pytest.raises(DomainError):
        analyze_Hc(unit_ideal(C3))


def test_split_Hc():
    assert strs(split_Hc(CONE)) == ["(x, y)", "(z, w)"]
    assert split_Hc(ideal(C3, "(y, x*z)")) == [ideal(C3, "(y, x*z)")]
    assert strs(split_Hc(ideal(C3, "(x)"))) == ["(x)"]


def test_ideal_transform_node():
    v = analyze_ideal_transform(ideal(C2, "(x*y)"), ideal(C2, "(x, y)"))
    assert v.result is False
    assert strs(v.side_data["U"]) == ["(x)", "(y)"]
    assert v.side_data["H0"] == ideal(C2, "(x*y)")
    assert v.side_data["H0_check"] is True
    assert [c.claim for c in v.consequences] == ["DI-splitting"]


def test_ideal_transform_grade_two():
    v = analyze_ideal_transform(None, ideal(C3, "(x, y)"))
    assert v.result is True
    assert [str(p) for p in v.graph.vertices] == ["(0)"]
    claims = [c.claim for c in v.consequences]
    assert "grade-two" in claims
    # the zero prime has ht((I + 0)/0) = 2 > 1, so the locality statement applies
    assert "DI-local" in claims


def test_ideal_transform_cone():
    v = analyze_ideal_transform(CONE, ideal(C4, "(x, y, z, w)"))
    assert v.result is False
    assert strs(v.side_data["U"]) == ["(x, y)", "(z, w)"]
    local = [c for c in v.consequences if c.claim == "DI-local"]
    assert local and local[0].result is False


def test_ideal_transform_empty_complement():
    v = analyze_ideal_transform(ideal(C2, "(x)"), ideal(C2, "(x)"))
    assert v.result == "empty" and v.basis is None


def test_top_cohomology():
    assert analyze_top_cohomology(CONE).result is False
    assert analyze_top_cohomology(ideal(C3, "(y, x*z)")).result is True
    v = analyze_top_cohomology(None, C3)
    assert v.result is True and v.side_data["0_d"].is_zero


def test_punctured():
    assert analyze_punctured(CONE).result is False
    assert analyze_punctured(CONE).consequences[0].claim == "formal-cohomology"
    assert analyze_punctured(ideal(C4, "(x, y)")).result is True
    v = analyze_punctured(ideal(C3, "(x, y, z)"))
    assert v.result == "empty" and v.basis is None and not v.consequences


def test_endomorphism_report():
    v = endomorphism_report(None, ideal(C3, "(x, y)"))
    assert v.side_data["u"].is_zero
    v = endomorphism_report(ideal(C2, "(x*y)"), ideal(C2, "(x)"))
    assert v.side_data["u"] == ideal(C2, "(x)")
    assert "Gorenstein" in v.statement
    with pytest.raises(DomainError):
        endomorphism_report(None, ideal(C3, "(x)"))


def test_build_report_selects_verdicts():
    r = build_report(CONE)
    assert [v.claim for v in r.verdicts] == ["Hc-indecomposable", "punctured-connected", "endomorphism-ring"]
    assert r.verdicts[-1].result == "open"
    r = build_report(ideal(C2, "(x, y)"), ideal(C2, "(x*y)"))
    assert [v.claim for v in r.verdicts] == [
        "Hc-indecomposable",
        "DI-indecomposable",
        "Hd-indecomposable",
        "punctured-connected",
    ]
    r = build_report(ideal(C3, "(x, y)"))
    assert r.verdicts[-1].claim == "endomorphism-ring" and r.verdicts[-1].result is True
    assert r.revalidate()


def test_every_basis_is_cited():
    r = build_report(ideal(C2, "(x, y)"), ideal(C2, "(x*y)"))
    for v in r.verdicts:
        for w in (v, *v.consequences):
            assert w.basis is None or w.basis in CITATIONS


def test_separation_helper():
    I = ideal(C2, "(x, y)")
    assert separation_holds(I, ideal(C2, "(x)"), ideal(C2, "(y)"))
    assert not separation_holds(ideal(C3, "(z)"), ideal(C3, "(x)"), ideal(C3, "(y)"))


@given(ideals(max_n=9, max_gens=10))
def test_verdict_invariant_under_top_part(I):
    assert analyze_Hc(I).result == analyze_Hc(ideal_top(I)).result


@settings(max_examples=100)
@given(ideals(max_n=9, max_gens=10))
def test_split_consistency(I):
    parts = split_Hc(I)
    c = height(I)
    meet = parts[0]
    for p in parts[1:]:
        meet = intersect(meet, p)
    assert meet == ideal_top(I)
    for p in parts:
        assert height(p) == c and ideal_top(p) == p
    for i, a in enumerate(parts):
        for b in parts[i + 1 :]:
            assert height(ideal_sum(a, b)) >= c + 2


@given(ideals(max_n=8, max_gens=8))
def test_grade_two_always_connected(I):
    if height(I) >= 2:
        v = analyze_ideal_transform(None, I)
        assert v.result is True


@settings(max_examples=60)
@given(ideals(max_n=8, max_gens=6))
def test_certificates_revalidate(I):
    assert build_report(I).revalidate()


def test_invariant_error_surfaces(monkeypatch):
    import specgraph.verdicts as mod

    monkeypatch.setattr(mod, "separation_holds", lambda *a: False)
    with pytest.raises(InvariantError):
        mod.analyze_ideal_transform(ideal(C2, "(x*y)"), ideal(C2, "(x, y)"))
