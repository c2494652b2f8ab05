import pytest

from conftest import cached
from hopfcat import frobenius as fb, gallery as g, linalg as la
from hopfcat.vcat import AxiomSet, verify_axioms


def test_table_rejects_non_associative():
    with pytest.raises(g.InvalidTable):
        g.Table(["a", "b"], [[1, 0], [0, 0]])


def test_table_requires_identity():
    with pytest.raises(g.InvalidTable):
        g.Table(["a", "b"], [[0, 0], [0, 0]])


def test_table_rejects_bad_shape():
    with pytest.raises(g.InvalidTable):
        g.Table(["a", "b"], [[0, 1]])


def test_named_tables():
    assert g.named_table("s3").is_group and len(g.named_table("s3")) == 6
    assert not g.named_table("idempotent2").is_group
    with pytest.raises(g.InvalidTable):
        g.named_table("c7")


def test_group_algebra_of_monoid_has_no_antipode_layer():
    assert not cached("km").has("antipode")
    assert cached("km").name == "kM"


def test_groupoid_rejects_missing_inverse():
    with pytest.raises(g.InvalidGroupoid):
        g.FiniteGroupoid(("x",), {("x", "x"): ("e", "a")},
                         {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("a", "a"): "a"},
                         {"x": "e"}, {"e": "e", "a": "a"})


def test_disjoint_union_rejects_shared_objects():
    with pytest.raises(g.InvalidGroupoid):
        g.disjoint_union(g.pair_groupoid(2), g.pair_groupoid(2))


def test_pair_groupoid_homs_are_lines():
    data = cached("pair3")
    assert all(data.d(x, y) == 1 for x, y in data.shape.pairs())


def test_action_groupoid_dimensions():
    swap = cached("c2_action")
    fixed = cached("c2_disjoint")
    assert [swap.d(x, y) for x, y in swap.shape.pairs()] == [1, 1, 1, 1]
    assert [fixed.d(x, y) for x, y in fixed.shape.pairs()] == [2, 0, 0, 2]


@pytest.mark.parametrize("maker", [g.trivial_line_g_algebra, g.group_graded_g_algebra])
def test_hopf_g_algebras(maker):
    h = maker()
    assert g.check_hopf_g_algebra(h).ok
    assert verify_axioms(g.hopf_g_algebra_to_category(h), AxiomSet.HOPF).ok


def test_broken_crossing_is_rejected():
    h = g.group_graded_g_algebra()
    crossing = dict(h.crossing)
    crossing[1, 0] = la.matrix([[0, 1], [1, 0]])
    from dataclasses import replace

    with pytest.raises(g.InvalidGAlgebra):
        g.hopf_g_algebra_to_category(replace(h, crossing=crossing))


def test_frobenius_g_algebra():
    data = g.frobenius_g_algebra_to_category(g.group_algebra_g_algebra(g.cyclic_group(3)))
    assert verify_axioms(data, AxiomSet.FROBENIUS).ok
    assert fb.check_frobenius_system(data, fb.system_from_structure(data)).ok


def test_frobenius_g_algebra_rejects_degenerate_pairing():
    from dataclasses import replace

    a = g.group_algebra_g_algebra()
    with pytest.raises(g.InvalidForm):
        g.frobenius_g_algebra_to_category(replace(a, form={0: la.matrix([[0]]), 1: la.matrix([[1]])}))


def test_fixture_catalogue():
    assert set(g.HOPF_FIXTURES) < set(g.FIXTURES)
    assert {"km", "km3", "interval"} == set(g.FIXTURES) - set(g.HOPF_FIXTURES)
