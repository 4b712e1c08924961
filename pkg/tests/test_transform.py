"""Elementary-transformation bookkeeping and the tangent-space cross-check."""

from fractions import Fraction

import pytest

from sheafatlas.atlas import EnumerationOptions, enumerate_components
from sheafatlas.curvecoh import CompleteIntersection, RationalCurve, genus
from sheafatlas.families import IdealExtension, SplitResolution, half_c3
from sheafatlas.p3rr import ChernData
from sheafatlas.transform import (
    CONDITION_IDS,
    ComponentDescriptor,
    ConditionStatus,
    InadmissibleDescriptor,
    assemble_report,
    build_report,
    check_conditions,
    chern_of_e,
    chi_hom_fl,
    chi_l,
    deg_l,
    dim_component,
    dim_tangent,
    hom_orbit_dim,
    signature,
    stability_margin,
)

V1_CONIC = ComponentDescriptor(IdealExtension(1), RationalCurve(2), 0)
S002_CONIC = ComponentDescriptor(SplitResolution(0, 0, 2), RationalCurve(2), 0)
S002_CONIC_1PT = ComponentDescriptor(SplitResolution(0, 0, 2), RationalCurve(2), 1)
V1_PLANE_CUBIC = ComponentDescriptor(
    IdealExtension(1), CompleteIntersection(1, 3), 1)


def all_reports(max_k=12):
    for k in range(3, max_k + 1):
        atlas = enumerate_components(EnumerationOptions(k=k))
        yield from atlas.reports


def verdict(d, condition):
    return {v.condition: v for v in check_conditions(d)}[condition]


def test_chi_l_examples():
    assert (chi_l(V1_CONIC), deg_l(V1_CONIC)) == (5, 4)
    assert (chi_l(S002_CONIC_1PT), deg_l(S002_CONIC_1PT)) == (5, 4)
    assert (chi_l(V1_PLANE_CUBIC), deg_l(V1_PLANE_CUBIC)) == (6, 6)


def test_chern_of_e_examples():
    assert chern_of_e(V1_CONIC) == ChernData(2, 0, 3, 0)
    assert chern_of_e(S002_CONIC) == ChernData(2, 0, 4, 0)
    assert chern_of_e(V1_PLANE_CUBIC) == ChernData(2, 0, 4, 0)


def test_chi_hom_fl_examples():
    assert chi_hom_fl(V1_CONIC) == 10
    assert chi_hom_fl(S002_CONIC) == 12
    d = ComponentDescriptor(SplitResolution(0, 1, 0), RationalCurve(3), 2)
    assert chi_hom_fl(d) == 16


def test_hom_orbit_dim_examples():
    assert hom_orbit_dim(V1_CONIC) == 9
    assert hom_orbit_dim(S002_CONIC_1PT) == 10
    assert hom_orbit_dim(V1_PLANE_CUBIC) == 12


def test_dim_component_examples():
    assert dim_component(V1_CONIC) == 22
    assert dim_component(S002_CONIC) == 32
    assert dim_component(V1_PLANE_CUBIC) == 33


def test_dim_tangent_examples():
    assert dim_tangent(V1_CONIC) == 22
    assert dim_tangent(S002_CONIC_1PT) == 34
    d = ComponentDescriptor(SplitResolution(0, 1, 0), RationalCurve(3), 0)
    assert dim_tangent(d) == 52


def test_verdict_ids_and_order_are_stable():
    for d in (V1_CONIC, S002_CONIC, V1_PLANE_CUBIC):
        assert tuple(v.condition for v in check_conditions(d)) == CONDITION_IDS


def test_conditions_admissible_case():
    assert verdict(V1_CONIC, "points-bound").status is ConditionStatus.HOLDS
    assert verdict(V1_CONIC, "degree-bound").status is ConditionStatus.HOLDS
    v16 = verdict(V1_CONIC, "twist-sections-vanish")
    assert v16.status is ConditionStatus.HOLDS
    assert "-2" in v16.note


def test_conditions_boundary_and_failure():
    bad = ComponentDescriptor(IdealExtension(1), RationalCurve(2), 1)
    assert verdict(bad, "points-bound").status is ConditionStatus.FAILS

    boundary = ComponentDescriptor(
        SplitResolution(0, 0, 2), CompleteIntersection(2, 2), 2)
    assert verdict(boundary, "points-bound").status is ConditionStatus.HOLDS
    v16 = verdict(boundary, "twist-sections-vanish")
    assert v16.status is ConditionStatus.HOLDS_GENERICALLY

    over = ComponentDescriptor(
        SplitResolution(0, 0, 2), CompleteIntersection(2, 2), 3)
    assert verdict(over, "points-bound").status is ConditionStatus.FAILS
    assert (verdict(over, "twist-sections-vanish").status
            is ConditionStatus.FAILS)


def test_degree_bound_failure():
    bad = ComponentDescriptor(IdealExtension(2), RationalCurve(2), 0)
    assert verdict(bad, "degree-bound").status is ConditionStatus.FAILS
    with pytest.raises(InadmissibleDescriptor):
        build_report(bad)


def test_generic_conditions_are_marked():
    for condition in ("curve-points-disjoint", "hom-h1-vanishing",
                      "surjection-exists"):
        assert (verdict(V1_CONIC, condition).status
                is ConditionStatus.HOLDS_GENERICALLY)
    # the variant-specific disjointness conditions swap roles
    assert (verdict(V1_CONIC, "section-curve-disjoint").status
            is ConditionStatus.HOLDS_GENERICALLY)
    assert verdict(V1_CONIC, "sing-disjoint").status is ConditionStatus.HOLDS
    assert (verdict(S002_CONIC, "sing-disjoint").status
            is ConditionStatus.HOLDS_GENERICALLY)


def test_stability_margin():
    margin = stability_margin(V1_CONIC)
    assert margin.degree == 1
    assert margin.coefficient(1) == Fraction(1, 2)
    cubic = ComponentDescriptor(IdealExtension(1), RationalCurve(3), 0)
    assert stability_margin(cubic).coefficient(1) == 1
    with pytest.raises(ValueError):
        stability_margin(S002_CONIC)


def test_signature_examples():
    assert signature(V1_CONIC).curve_parts == ((2, 0),)
    assert signature(V1_CONIC).isolated_points_from_w == 0
    assert signature(V1_CONIC).reflexive_sing_c3 == 2

    sig = signature(S002_CONIC_1PT)
    assert (sig.curve_parts, sig.isolated_points_from_w,
            sig.reflexive_sing_c3) == (((2, 0),), 1, 4)

    sig = signature(ComponentDescriptor(
        SplitResolution(0, 1, 0), CompleteIntersection(2, 2), 3))
    assert (sig.curve_parts, sig.isolated_points_from_w,
            sig.reflexive_sing_c3) == (((4, 1),), 3, 8)


def test_build_report_m3_flags_published_dimension():
    report = build_report(V1_CONIC)
    assert report.k == 3
    assert report.dim_component == 22
    codes = [n.code for n in report.erratum_notes]
    assert codes == ["published-m3-values"]
    note = report.erratum_notes[0]
    assert note.value("computed_dimension") == 22
    assert note.value("published_dimension") == 21
    assert note.value("published_spectrum") == (-1, 0, 1)


def test_build_report_examples():
    report = build_report(S002_CONIC)
    assert (report.k, report.dim_component) == (4, 32)
    assert report.erratum_notes == ()

    report = build_report(
        ComponentDescriptor(IdealExtension(1), RationalCurve(3), 0))
    assert (report.k, report.dim_component) == (4, 30)
    assert report.chi_hom_fl == 14


def test_build_report_mixed_triple_notes_mismatch():
    d = ComponentDescriptor(SplitResolution(1, 0, 1), RationalCurve(2), 0)
    report = build_report(d)
    codes = [n.code for n in report.erratum_notes]
    assert codes == ["closed-form-c3-mismatch"]
    note = report.erratum_notes[0]
    assert note.value("closed_form") == Fraction(77, 2)
    assert note.value("resolution_oracle") == 40


def test_degree_one_needs_override():
    line = ComponentDescriptor(SplitResolution(0, 0, 2), RationalCurve(1), 0)
    with pytest.raises(InadmissibleDescriptor):
        build_report(line)
    report = build_report(line, min_curve_degree=1)
    assert "outside-degree-novelty" in [n.code for n in report.erratum_notes]


def test_assemble_report_on_inadmissible_descriptor():
    bad = ComponentDescriptor(IdealExtension(2), RationalCurve(2), 0)
    report = assemble_report(bad)
    assert report.dim_component == report.dim_tangent
    statuses = {v.condition: v.status for v in report.verdicts}
    assert statuses["degree-bound"] is ConditionStatus.FAILS


def test_transformed_chern_all_descriptors():
    for report in all_reports():
        d = report.descriptor
        assert report.chern_e.c1 == 0
        assert report.chern_e.c3 == 0
        assert report.chern_e.c2 == report.reflexive_chern.c2 + d.curve.degree


def test_tangent_equals_component_all_descriptors():
    for report in all_reports():
        assert report.dim_component == report.dim_tangent


def test_degree_identity_all_descriptors():
    for report in all_reports():
        d = report.descriptor
        lhs = (2 * genus(d.curve) - 2 + 4 * d.curve.degree
               - 2 * report.deg_l)
        assert lhs == 2 * (d.s - half_c3(d.reflexive))


def test_dimension_monotone_in_s():
    groups = {}
    for report in all_reports():
        key = (report.descriptor.reflexive, report.descriptor.curve)
        groups.setdefault(key, []).append(report)
    seen_neighbours = 0
    for group in groups.values():
        group.sort(key=lambda r: r.descriptor.s)
        for lo, hi in zip(group, group[1:]):
            assert hi.descriptor.s == lo.descriptor.s + 1
            assert hi.dim_component == lo.dim_component + 2
            seen_neighbours += 1
    assert seen_neighbours > 0


def test_stability_margin_positive_for_extensions():
    for report in all_reports():
        if isinstance(report.descriptor.reflexive, IdealExtension):
            assert stability_margin(report.descriptor).coefficient(1) > 0
