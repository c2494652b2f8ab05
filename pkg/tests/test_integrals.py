import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cached
from hopfcat import gallery, integrals as ig, linalg as la
from hopfcat.frobenius import check_casimir

# hand-derived integrals on one-object fixtures, in the fixture basis order
KNOWN = {
    ("c4", "left"): [1, 1, 1, 1],
    ("c4", "right"): [1, 1, 1, 1],
    ("fun_s3", "left"): [1, 0, 0, 0, 0, 0],
    ("sweedler", "left"): [0, 0, 1, 1],    # x + gx
    ("sweedler", "right"): [0, 0, 1, -1],  # x - gx
    ("km", "left"): [0, 1],
    ("km3", "left"): [0, 0, 1],
}


@pytest.mark.parametrize("name,side", sorted(KNOWN))
def test_known_one_object_integrals(name, side):
    (t,) = ig.integral_spaces(cached(name), side)["*"].basis
    assert [int(v) for v in t["*", "*"]] == KNOWN[name, side]


@pytest.mark.parametrize("name", ["pair2", "pair3", "c2_action", "g_line"])
def test_groupoid_left_integral_is_sum_into_anchor(name):
    data = cached(name)
    for z, sp in ig.integral_spaces(data, "left").items():
        assert sp.dimension == 1
        (t,) = sp.basis
        for x, y in data.shape.pairs():
            expected = [1] * data.d(x, y) if y == z else [0] * data.d(x, y)
            assert [int(v) for v in t[x, y]] == expected


def test_interval_has_one_sided_gaps():
    data = cached("interval")
    left = {x: sp.dimension for x, sp in ig.integral_spaces(data, "left").items()}
    right = {x: sp.dimension for x, sp in ig.integral_spaces(data, "right").items()}
    assert left == {"a": 0, "b": 1} and right == {"a": 1, "b": 0}


def test_basis_elements_are_integrals(any_data):
    for side in ("left", "right"):
        for sp in ig.integral_spaces(any_data, side).values():
            for t in sp.basis:
                assert ig.check_integral(any_data, t).ok


def test_global_basis_dimension_is_sum_of_anchored(any_data):
    for side in ("left", "right"):
        anchored = sum(sp.dimension for sp in ig.integral_spaces(any_data, side).values())
        assert len(ig.global_integral_basis(any_data, side)) == anchored


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["c4", "sweedler", "pair2", "g_group", "km", "interval"]),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_combinations_of_integrals_are_integrals(name, coeffs):
    data = cached(name)
    for side in ("left", "right"):
        basis = ig.global_integral_basis(data, side)
        total = ig.zero_family(data, side)
        for c, t in zip(coeffs, basis):
            total = total + t.scale(la.Q(c))
        assert ig.check_integral(data, total).ok


def test_non_integral_is_rejected():
    data = cached("c4")
    t = ig.IntegralFamily("left", {("*", "*"): la.vector([1, 0, 0, 0])})
    rep = ig.check_integral(data, t)
    assert not rep.ok and rep.first_failure("left integral").witness is not None


def test_hopf_integrals_are_nonsingular(hopf_data):
    for side in ("left", "right"):
        t = ig.standard_integral(hopf_data, side)
        r = ig.nonsingularity_report(hopf_data, t)
        assert r.left_nonsingular and r.right_nonsingular


def test_km_integral_is_singular():
    data = cached("km")
    t = ig.standard_integral(data, "left")
    r = ig.nonsingularity_report(data, t)
    assert r.p_ranks["*", "*"] == 1 and not r.left_nonsingular
    with pytest.raises(la.NotInvertible):
        ig.inverse_maps(data, t, "p")


def test_space_dimensions_agree(hopf_data):
    rep = ig.space_isomorphism_checks(hopf_data)
    assert rep.ok, str(rep)


@pytest.mark.parametrize("variant", ig.CASIMIR_VARIANTS)
def test_casimir_variants(hopf_data, variant):
    side = "left" if variant.startswith("left") else "right"
    t = ig.standard_integral(hopf_data, side)
    e = ig.casimir_from_integral(hopf_data, t, variant)
    assert check_casimir(hopf_data, e).ok


def test_integral_survives_casimir_round_trip(hopf_data):
    t = ig.standard_integral(hopf_data, "left")
    e = ig.casimir_from_integral(hopf_data, t, "left")
    assert ig.integral_from_casimir(hopf_data, e).equals(t)


def test_transport_switches_sides(hopf_data):
    t = ig.standard_integral(hopf_data, "left")
    moved = ig.transport_integral(hopf_data, t)
    assert moved.side == "right" and ig.check_integral(hopf_data, moved).ok
    assert ig.transport_integral(hopf_data, moved, use_inverse=True).equals(t)


def test_dual_opcategory_integrals_one_dimensional(hopf_data):
    from hopfcat.vcat import dual_semi_hopf

    dual = dual_semi_hopf(hopf_data)
    for x in hopf_data.objects:
        for side in ("left", "right"):
            assert ig.opcategory_integral_space(dual, x, side).dimension == 1


def test_assemble_family_skips_empty_spaces():
    data = cached("interval")
    t = ig.standard_integral(data, "left")
    assert ig.check_integral(data, t).ok and not t.is_zero()
    assert ig.assemble_family({}) is None
