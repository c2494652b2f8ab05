import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import cached
from hopfcat import gallery, linalg as la
from hopfcat.vcat import (AxiomFailure, AxiomSet, MissingLayer, VCatData, VGraphShape, apply_at, dual,
                          dual_semi_hopf, opposite_variants, permute, require_axioms, swap_map, trivial,
                          verify_axioms)
from perturb import perturb


def test_apply_at_matches_kronecker_identity():
    rng = random.Random(5)
    f = la.matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(2)])
    x = la.matrix([[rng.randint(-3, 3) for _ in range(4)] for _ in range(2 * 3 * 5)])
    expected = la.kron(la.identity(2), f, la.identity(5)) @ x
    assert la.equal(apply_at(f, x, 2, 5), expected)


def test_permute_and_swap():
    v = la.kron(la.basis_vector(2, 0), la.basis_vector(3, 2))
    swapped = swap_map(2, 3) @ v
    assert la.equal(swapped, la.kron(la.basis_vector(3, 2), la.basis_vector(2, 0)))
    assert la.equal(permute(v, [2, 3], [1, 0]), swapped)


def test_shape_requires_every_pair():
    with pytest.raises(ValueError):
        VGraphShape(("a", "b"), {("a", "a"): 1})


def test_trivial_category_is_hopf():
    assert verify_axioms(trivial(), AxiomSet.HOPF).ok


def test_axiom_set_parsing():
    assert AxiomSet.parse("semi_hopf") is AxiomSet.SEMI_HOPF
    assert AxiomSet.parse(" Hopf-Op ") is AxiomSet.HOPF_OP
    with pytest.raises(ValueError):
        AxiomSet.parse("monoidal")


def test_missing_layer_is_reported():
    with pytest.raises(MissingLayer):
        verify_axioms(cached("km"), AxiomSet.HOPF)


def test_hopf_fixtures_pass(hopf_data):
    assert verify_axioms(hopf_data, AxiomSet.HOPF).ok


@pytest.mark.parametrize("name", ["km", "km3", "interval"])
def test_semi_hopf_fixtures(name):
    assert verify_axioms(cached(name), AxiomSet.SEMI_HOPF).ok


@pytest.mark.parametrize("name", ["pair2", "pair3", "c2_groupoid", "c2_action", "c2_disjoint"])
def test_groupoid_fixtures_are_frobenius(name):
    assert verify_axioms(cached(name), AxiomSet.FROBENIUS).ok


def test_report_lists_a_witness_for_failures():
    data = cached("c2")
    comp = {k: v.copy() for k, v in data.comp.items()}
    comp["*", "*", "*"][0, 3] += 1
    rep = verify_axioms(data.with_layers(comp=comp), AxiomSet.SEMI_HOPF)
    assert not rep.ok
    bad = rep.first_failure()
    assert bad.witness is not None and any(v != 0 for v in bad.residual)
    assert "FAILS on basis element" in bad.describe()
    d = rep.to_dict()
    assert d["ok"] is False and d["first_counterexamples"]


def test_require_axioms_raises_and_caches():
    data = cached("c4")
    first = require_axioms(data, "hopf")
    assert require_axioms(data, AxiomSet.HOPF) is first
    comp = {k: v.copy() for k, v in data.comp.items()}
    comp["*", "*", "*"][1, 0] += 1
    with pytest.raises(AxiomFailure):
        require_axioms(data.with_layers(comp=comp), "category")


def test_double_dual_restores_structure(hopf_data):
    back = dual(dual(hopf_data))
    for fieldname in ("comp", "unit", "local_comult", "local_counit", "antipode"):
        a, b = getattr(hopf_data, fieldname), getattr(back, fieldname)
        assert a.keys() == b.keys()
        assert all(la.equal(a[k], b[k]) for k in a)


def test_dual_is_hopf_opcategory(hopf_data):
    assert verify_axioms(dual_semi_hopf(hopf_data), AxiomSet.HOPF_OP).ok


@pytest.mark.parametrize("variant", ["op", "cop", "op_cop", "cop_op"])
@pytest.mark.parametrize("name", ["c4", "s3", "sweedler", "pair2", "c2_action", "g_group"])
def test_opposite_variants_stay_hopf(variant, name):
    out = opposite_variants(cached(name), variant)
    assert out.has("antipode")
    assert verify_axioms(out, AxiomSet.HOPF).ok


def test_opposite_of_noncommutative_algebra_differs():
    s3 = cached("s3")
    assert not all(la.equal(s3.comp[k], v) for k, v in opposite_variants(s3, "op").comp.items())


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["c2", "c4", "klein4", "fun_s3", "pair2", "c2_action", "sweedler", "km", "interval"]),
       st.integers(0, 10 ** 6))
def test_random_perturbation_is_caught(name, seed):
    mutated, info, axioms = perturb(cached(name), random.Random(seed))
    rep = verify_axioms(mutated, axioms)
    assert not rep.ok, info
    bad = rep.first_failure()
    assert bad.witness is not None


def test_perturbation_copies_data():
    data = cached("c4")
    before = {k: v.copy() for k, v in data.comp.items()}
    perturb(data, random.Random(0))
    assert all(la.equal(before[k], data.comp[k]) for k in before)
