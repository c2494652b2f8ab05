"""The monoid algebra of {e, g | g g = g}: a bialgebra with a Frobenius structure but no antipode."""

from hopfcat import frobenius as fb, gallery, hopf, integrals as ig, larson_sweedler as ls, linalg as la
from hopfcat.vcat import AxiomSet, verify_axioms

data = gallery.fixture("km")
print("semi-Hopf axioms:", verify_axioms(data, AxiomSet.SEMI_HOPF).ok)
try:
    hopf.solve_antipode(data)
except hopf.NoAntipode as err:
    print("antipode:", err)

(t,) = ig.left_integral_space(data, "*").basis
print("left integrals spanned by", [la.fmt(v) for v in t["*", "*"]])
print("p-map rank", ig.nonsingularity_report(data, t).p_ranks["*", "*"], "of 2")

# the element e(x)e + g(x)g does not commute with g, and delta_e pairs degenerately
naive = fb.CasimirFamily({("*", "*"): la.vector([1, 0, 0, 1])})
print("\ne(x)e + g(x)g:", fb.check_casimir(data, naive).first_failure().describe())
for k, name in enumerate("eg"):
    trace = fb.TraceFamily({"*": la.vector([int(i == k) for i in range(2)])})
    G = fb.trace_to_form(data, trace).gram(data, "*", "*")
    print(f"delta_{name} Gram matrix {[[la.fmt(v) for v in r] for r in G]}, rank {la.rank(G)}")

system = fb.system_from_trace(data, fb.TraceFamily({"*": la.vector([0, 1])}))
E = system.casimir.matrix(data, "*", "*")
print("\nCasimir from delta_g:", [[la.fmt(v) for v in r] for r in E])
print("full Frobenius checks:", fb.frobenius_report(data, system).ok)

rep = ls.ls_report(data)
print("\nconditions:", rep.conditions)
print("category Frobenius:", rep.category_frobenius)
for note in rep.notes:
    print("note:", note)
