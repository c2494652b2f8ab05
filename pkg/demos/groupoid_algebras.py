"""Groupoid algebras: Hopf and Frobenius at once, and weak Hopf algebras once packed."""

from hopfcat import frobenius as fb, gallery, hopf, larson_sweedler as ls, linalg as la
from hopfcat.vcat import AxiomSet, verify_axioms

for name in ("pair2", "c2_action", "c2_disjoint"):
    data = gallery.fixture(name)
    print(f"{data.name}: hom dimensions {dict((f'{x}{y}', d) for (x, y), d in data.shape.dims.items())}")
    print("  Hopf", verify_axioms(data, AxiomSet.HOPF).ok, " Frobenius", verify_axioms(data, AxiomSet.FROBENIUS).ok)
    e = fb.casimir_from_comult(data)
    for (x, y), v in sorted(e.tensors.items()):
        E = e.matrix(data, x, y)
        lx, ly = data.shape.basis_labels[x, y], data.shape.basis_labels[y, x]
        terms = [f"{lx[i]}(x){ly[j]}" for i in range(len(lx)) for j in range(len(ly)) if E[i, j] != 0]
        if terms:
            print(f"  e^{x}{y} = {' + '.join(terms)}")

p = hopf.pack(gallery.fixture("pair2"))
print("\npacked pair groupoid, dimension", p.dimension)
print("weak Hopf identities:", hopf.check_weak_hopf(p).ok)
print("coproduct of 1:", [la.fmt(v) for v in hopf.unit_coproduct(p)])
print("equals 1(x)1:", hopf.unit_coproduct_is_trivial(p))

rep = ls.ls_report(gallery.fixture("pair3"))
print("\npair groupoid on 3 objects, conditions all hold:", all(rep.conditions.values()))
