"""Acceptance criteria. Each test prints one PASS/FAIL line naming the sub-checks that failed.

Run ``python3 tests/test_acceptance.py`` for the lines alone, or ``pytest -v tests/test_acceptance.py``.
"""

import itertools
import random
import sys

import numpy as np
import pytest

from conftest import cached
from hopfcat import frobenius as fb, gallery, hopf, integrals as ig, larson_sweedler as ls, linalg as la
from hopfcat import modules as md
from hopfcat.vcat import AxiomSet, VCatData, VGraphShape, dual_semi_hopf, verify_axioms
from perturb import perturb

O = ("*", "*")


def family(entries, size):
    v = la.zeros(size)
    for i in entries:
        v[i] = la.Q(1)
    return v


def c4_casimir(pairs):
    """Casimir on kC4 from exponent pairs (i, j) meaning g^i (x) g^j."""
    return fb.CasimirFamily({O: family([4 * i + j for i, j in pairs], 16)})


CASIMIR_1 = [(0, 0), (1, 3), (2, 2), (3, 1)]
CASIMIR_2 = [(0, 1), (1, 0), (2, 3), (3, 2)]
DELTA_E = fb.TraceFamily({"*": la.vector([1, 0, 0, 0])})
DELTA_G = fb.TraceFamily({"*": la.vector([0, 1, 0, 0])})


def report(number, title, checks, out=None):
    failed = [name for name, ok in checks if not ok]
    line = f"criterion {number:>2}: {'PASS' if not failed else 'FAIL'}  {title}"
    if failed:
        line += "  [failed: " + "; ".join(failed) + "]"
    (out or sys.stdout).write(line + "\n")
    return not failed


def system_ok(data, casimir, trace):
    return (fb.check_casimir(data, casimir).ok
            and fb.check_frobenius_system(data, fb.FrobeniusSystem(casimir, trace)).ok)


# ---------------------------------------------------------------- criteria

def criterion_1():
    data = cached("c4")
    e1, e2 = c4_casimir(CASIMIR_1), c4_casimir(CASIMIR_2)
    wrong = fb.check_frobenius_system(data, fb.FrobeniusSystem(e1, DELTA_G))
    return [
        ("casimir 1 with delta_e", system_ok(data, e1, DELTA_E)),
        ("casimir 2 with delta_g", system_ok(data, e2, DELTA_G)),
        ("casimir 1 with delta_g is rejected", fb.check_casimir(data, e1).ok and not wrong.ok),
    ]


def criterion_2():
    data = cached("c4")
    total = ig.IntegralFamily("left", {O: la.vector([1, 1, 1, 1])})
    e1, e2 = c4_casimir(CASIMIR_1), c4_casimir(CASIMIR_2)
    back = ig.casimir_from_integral(data, total, "left")
    (space_basis,) = ig.left_integral_space(data, "*").basis
    return [
        ("integral space is the line through the sum", space_basis.equals(total)),
        ("integral of casimir 1", ig.integral_from_casimir(data, e1).equals(total)),
        ("integral of casimir 2", ig.integral_from_casimir(data, e2).equals(total)),
        ("casimir of the integral is casimir 1", back.equals(e1)),
        ("casimir of the integral is not casimir 2", not back.equals(e2)),
    ]


def criterion_3():
    data = cached("km")  # basis e, g with g g = g
    try:
        hopf.solve_antipode(data)
        no_antipode = False
    except hopf.NoAntipode:
        no_antipode = True
    spaces = ig.left_integral_space(data, "*")
    t = spaces.basis[0] if spaces.basis else None
    casimir = fb.CasimirFamily({O: family([0, 3], 4)})  # e (x) e + g (x) g
    delta_e = fb.TraceFamily({"*": la.vector([1, 0])})
    return [
        ("semi-Hopf axioms", verify_axioms(data, AxiomSet.SEMI_HOPF).ok),
        ("no antipode", no_antipode),
        ("left integrals spanned by g", spaces.dimension == 1 and [int(v) for v in t[O]] == [0, 1]),
        ("p-map has rank 1", t is not None and ig.nonsingularity_report(data, t).p_ranks[O] == 1),
        ("e(x)e + g(x)g is a Casimir element", fb.check_casimir(data, casimir).ok),
        ("triangles with delta_e",
         fb.check_frobenius_system(data, fb.FrobeniusSystem(casimir, delta_e)).ok),
    ]


def groupoid_reference(g):
    """Cocomposition, counit, local multiplication and local unit written out from the groupoid itself."""
    objs = g.objects
    pos = {(x, y): {a: i for i, a in enumerate(g.hom(x, y))} for x, y in itertools.product(objs, repeat=2)}
    cocomp = {}
    for x, y, z in itertools.product(objs, repeat=3):
        dxy, dyz, dxz = len(g.hom(x, y)), len(g.hom(y, z)), len(g.hom(x, z))
        m = la.zeros(dxy * dyz, dxz)
        for k, a in enumerate(g.hom(x, z)):
            for h in g.hom(y, z):
                m[pos[x, y][g.compose[a, g.inverses[h]]] * dyz + pos[y, z][h], k] = 1
        cocomp[x, y, z] = m
    counit = {x: family([pos[x, x][g.identities[x]]], len(g.hom(x, x))) for x in objs}
    mult, unit, casimir = {}, {}, {}
    for x, y in itertools.product(objs, repeat=2):
        d = len(g.hom(x, y))
        m = la.zeros(d, d * d)
        for i in range(d):
            m[i, i * d + i] = 1
        mult[x, y], unit[x, y] = m, la.vector([1] * d)
        dyx = len(g.hom(y, x))
        casimir[x, y] = family([pos[x, y][a] * dyx + pos[y, x][g.inverses[a]] for a in g.hom(x, y)], d * dyx)
    return cocomp, counit, mult, unit, casimir


GROUPOIDS = {"pair2": lambda: gallery.pair_groupoid(2),
             "c2_groupoid": lambda: gallery.group_groupoid("c2"),
             "c2_action": gallery.c2_swap_action_groupoid}


def criterion_4():
    checks = []
    for name, make in GROUPOIDS.items():
        data = cached(name)
        cocomp, counit, mult, unit, casimir = groupoid_reference(make())
        checks.append((f"{name} Hopf", verify_axioms(data, AxiomSet.HOPF).ok))
        checks.append((f"{name} Frobenius", verify_axioms(data, AxiomSet.FROBENIUS).ok))
        checks.append((f"{name} explicit cocomposition and counit",
                       all(la.equal(data.cocomp[k], v) for k, v in cocomp.items())
                       and all(la.equal(data.counit[k], v) for k, v in counit.items())))
        checks.append((f"{name} explicit local multiplication and unit",
                       all(la.equal(data.local_mult[k], v) for k, v in mult.items())
                       and all(la.equal(data.local_unit[k], v) for k, v in unit.items())))
        local_ok = True
        for x, y in data.shape.pairs():
            d = data.d(x, y)
            if d == 0:
                continue
            local = VCatData(VGraphShape(("o",), {("o", "o"): d}),
                             comp={("o", "o", "o"): data.local_mult[x, y]}, unit={"o": data.local_unit[x, y]},
                             cocomp={("o", "o", "o"): data.local_comult[x, y]},
                             counit={"o": data.local_counit[x, y]})
            local_ok &= verify_axioms(local, AxiomSet.FROBENIUS).ok
        checks.append((f"{name} local Frobenius", local_ok))
        checks.append((f"{name} casimir is sum of g (x) g^-1",
                       fb.casimir_from_comult(data).equals(fb.CasimirFamily(casimir))))
    return checks


def criterion_5():
    checks = []
    for name in sorted(gallery.FIXTURES):
        rep = ls.ls_report(cached(name))
        checks.append((f"{name} consistent", rep.consistent))
    return checks


# trace values known in closed form: delta of the identity on group algebras and groupoids
KNOWN_TRACES = {"trivial", "c2", "c4", "klein4", "s3", "pair2", "pair3", "c2_groupoid", "c2_action", "c2_disjoint"}


def proportional(a, b):
    a = np.concatenate([np.asarray(v, dtype=object) for v in a])
    b = np.concatenate([np.asarray(v, dtype=object) for v in b])
    nz = [i for i in range(len(b)) if b[i] != 0]
    if not nz or a[nz[0]] == 0:
        return False
    c = a[nz[0]] / b[nz[0]]
    return la.equal(a, b * c)


def identity_delta(data):
    return [data.unit[x] for x in data.objects]


def criterion_6():
    checks = []
    for name in gallery.HOPF_FIXTURES:
        data = cached(name)
        left, right = ig.standard_integral(data, "left"), ig.standard_integral(data, "right")
        bare = data.without("antipode")
        checks.append((f"{name} antipode", ls.synthesize_antipode(bare, left, right).equals(
            hopf.solve_antipode(bare))))
        hf = ls.frobenius_from_hopf_integral(data, left)
        ok = hf.report.ok and fb.dual_basis_check(data, hf.system).ok and fb.opcat_iso_check(data, hf.system).ok
        checks.append((f"{name} Frobenius checks", ok))
        if name in KNOWN_TRACES:
            traces = [hf.system.trace[x] for x in data.objects]
            checks.append((f"{name} trace is delta of the identity",
                           proportional(traces, identity_delta(data))))
    return checks


def criterion_7():
    checks = []
    for name in gallery.HOPF_FIXTURES:
        data = cached(name)
        std = md.standard_structures(data)
        for label, m in (("regular", md.regular_module(data)), ("H*1", std["Hstar1"]), ("H1", std["H1"])):
            checks.append((f"{name} {label} dimension law", md.fundamental_iso_check(m).ok))
        rep = ig.space_isomorphism_checks(data)
        checks.append((f"{name} right integrals vs H1 coinvariants",
                       rep.passed("right integrals match H1 coinvariants")))
    return checks


def criterion_8():
    checks = []
    for name in ("pair2", "pair3"):
        p = hopf.pack(cached(name))
        checks.append((f"{name} weak Hopf", hopf.check_weak_hopf(p).ok))
        checks.append((f"{name} unit coproduct nontrivial", not hopf.unit_coproduct_is_trivial(p)))
        checks.append((f"{name} packed Frobenius", fb.check_frobenius_algebra(fb.pack_frobenius(cached(name))).ok))
    for name in ("c2", "c4", "sweedler", "fun_s3"):
        data = cached(name)
        p = hopf.pack(data)
        checks.append((f"{name} packs to an ordinary Hopf algebra",
                       hopf.unit_coproduct_is_trivial(p) and verify_axioms(hopf.as_category(p), AxiomSet.HOPF).ok))
        frob = fb.frobenius_structure(data, fb.find_frobenius_system(data))
        checks.append((f"{name} packs to an ordinary Frobenius algebra",
                       fb.check_frobenius_algebra(fb.pack_frobenius(frob)).ok))
    return checks


def criterion_9():
    checks = []
    for name in gallery.HOPF_FIXTURES:
        checks.append((f"{name} dual Hopf opcategory",
                       verify_axioms(dual_semi_hopf(cached(name)), AxiomSet.HOPF_OP).ok))
    for name in sorted(gallery.FIXTURES):
        data = cached(name)
        system = fb.find_frobenius_system(data)
        frobenius = system is not None and fb.frobenius_report(data, system).ok
        checks.append((f"{name} Frobenius iff dual certificate",
                       frobenius == fb.dual_frobenius_certificate(data).ok))
        if system is not None:
            checks.append((f"{name} psi identities", fb.frobenius_iso_check(data, system).ok
                           and fb.opcat_iso_check(data, system).ok))
    return checks


def criterion_10(count=100, seed=20240):
    rng = random.Random(seed)
    names = sorted(gallery.FIXTURES)
    silent = []
    for trial in range(count):
        name = rng.choice(names)
        mutated, info, axioms = perturb(cached(name), rng)
        rep = verify_axioms(mutated, axioms)
        bad = rep.first_failure()
        if rep.ok or bad.witness is None:
            silent.append((name, info))
    return [(f"perturbation {name} {info[0]}{info[1]} entry {info[2]} caught", False) for name, info in silent] \
        or [(f"{count} perturbations caught", True)]


CRITERIA = [
    (1, "kC4 Frobenius systems", criterion_1),
    (2, "kC4 integral and Casimir round trip", criterion_2),
    (3, "kM is Frobenius but not Hopf", criterion_3),
    (4, "groupoid algebras carry the explicit Hopf and Frobenius structures", criterion_4),
    (5, "Larson-Sweedler conditions agree on every fixture", criterion_5),
    (6, "synthesised antipodes and Frobenius systems", criterion_6),
    (7, "fundamental theorem dimension law", criterion_7),
    (8, "packing into weak Hopf and Frobenius algebras", criterion_8),
    (9, "duality and psi identities", criterion_9),
    (10, "random perturbations are always caught", criterion_10),
]


@pytest.mark.parametrize("number,title,run", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, run, capsys):
    checks = run()
    with capsys.disabled():
        sys.stdout.write("\n")
        ok = report(number, title, checks)
    assert ok, [name for name, good in checks if not good]


if __name__ == "__main__":
    results = [report(n, title, run()) for n, title, run in CRITERIA]
    sys.exit(0 if all(results) else 1)
