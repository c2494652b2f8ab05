import numpy as np
import pytest

from conftest import cached
from hopfcat import gallery, hopf, linalg as la
from hopfcat.vcat import AxiomSet, verify_axioms


def test_solved_antipode_matches_stored(hopf_data):
    solved = hopf.solve_antipode(hopf_data.without("antipode"))
    assert solved.equals(hopf.AntipodeFamily(hopf_data.antipode))


@pytest.mark.parametrize("table", ["c2", "c4", "klein4", "s3"])
def test_group_antipode_is_inversion(table):
    t = gallery.named_table(table)
    data = hopf.solve_antipode(gallery.group_algebra(t).without("antipode"))
    s = data["*", "*"]
    for a in range(len(t)):
        col = [int(v) for v in s[:, a]]
        assert col == [int(b == t.inverse(a)) for b in range(len(t))]


def test_sweedler_antipode_values():
    s = cached("sweedler").antipode["*", "*"]
    # basis 1, g, x, gx: S(g) = g, S(x) = -gx, S(gx) = x
    assert [int(v) for v in s[:, 1]] == [0, 1, 0, 0]
    assert [int(v) for v in s[:, 2]] == [0, 0, 0, -1]
    assert [int(v) for v in s[:, 3]] == [0, 0, 1, 0]


@pytest.mark.parametrize("name", ["km", "km3", "interval"])
def test_no_antipode_for_non_hopf(name):
    with pytest.raises(hopf.NoAntipode):
        hopf.solve_antipode(cached(name))


def test_one_sided_solve_is_particular_solution():
    data = cached("c4").without("antipode")
    s = hopf.solve_antipode(data, sides="right")
    rep = verify_axioms(hopf.with_antipode(data, s), AxiomSet.HOPF)
    assert rep.passed("right antipode")


def test_antipode_properties(hopf_data):
    assert hopf.check_antipode_properties(hopf_data).ok


def test_op_antipode_is_inverse(hopf_data):
    sbar = hopf.op_antipode(hopf_data)
    assert hopf.check_op_antipode(hopf_data, sbar, hopf_data.antipode).ok


def test_sweedler_antipode_has_order_four():
    s = cached("sweedler").antipode["*", "*"]
    s2 = s @ s
    assert not la.equal(s2, la.identity(4))
    assert la.equal(s2 @ s2, la.identity(4))


def test_wrong_op_antipode_is_rejected():
    data = cached("sweedler")
    rep = hopf.check_op_antipode(data, data.antipode, data.antipode)
    assert not rep.ok


def test_fusion_map_invertible_exactly_for_hopf(hopf_data):
    for x in hopf_data.objects:
        for y in hopf_data.objects:
            f = hopf.fusion_map(hopf_data, x, y)
            assert f.invertible
            assert la.equal(f.inverse, f.formula_inverse)


def test_fusion_map_singular_for_km():
    f = hopf.fusion_map(cached("km"), "*", "*")
    assert not f.invertible and f.rank < f.canonical.shape[0]


@pytest.mark.parametrize("name", ["pair2", "pair3", "c2_action", "c2_disjoint", "g_group"])
def test_packed_multi_object_is_weak_hopf(name):
    p = hopf.pack(cached(name))
    assert hopf.check_weak_hopf(p).ok
    assert not hopf.unit_coproduct_is_trivial(p)


@pytest.mark.parametrize("name", ["c2", "c4", "s3", "sweedler", "fun_s3"])
def test_packed_one_object_is_ordinary_hopf(name):
    p = hopf.pack(cached(name))
    assert hopf.unit_coproduct_is_trivial(p)
    assert verify_axioms(hopf.as_category(p), AxiomSet.HOPF).ok
    assert hopf.check_weak_hopf(p).ok


def test_packed_dimension_is_total_hom_dimension():
    data = cached("pair3")
    p = hopf.pack(data)
    assert p.dimension == sum(data.d(x, y) for x, y in data.shape.pairs()) == 9
    assert len(p.labels) == 9


@pytest.mark.parametrize("fieldname", ["mult", "comult", "antipode"])
def test_weak_hopf_check_catches_broken_packing(fieldname):
    from dataclasses import replace

    p = hopf.pack(cached("pair2"))
    arr = getattr(p, fieldname).copy()
    arr[np.unravel_index(int(np.flatnonzero(arr != 0)[0]), arr.shape)] += 1
    assert not hopf.check_weak_hopf(replace(p, **{fieldname: arr})).ok
