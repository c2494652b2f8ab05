"""Two Frobenius systems on the group algebra of C4, and which one an integral produces."""

from hopfcat import frobenius as fb, gallery, integrals as ig, linalg as la

data = gallery.fixture("c4")
labels = data.shape.basis_labels["*", "*"]
O = ("*", "*")


def casimir(pairs):
    v = la.zeros(16)
    for i, j in pairs:
        v[4 * i + j] = 1
    return fb.CasimirFamily({O: v})


def show(e):
    E = e.matrix(data, "*", "*")
    return " + ".join(f"{labels[i]}(x){labels[j]}" for i in range(4) for j in range(4) if E[i, j] != 0)


inverse_pairs = casimir([(0, 0), (1, 3), (2, 2), (3, 1)])
shifted_pairs = casimir([(0, 1), (1, 0), (2, 3), (3, 2)])
delta = lambda k: fb.TraceFamily({"*": la.vector([int(i == k) for i in range(4)])})

for e, k in [(inverse_pairs, 0), (shifted_pairs, 1), (inverse_pairs, 1)]:
    system = fb.FrobeniusSystem(e, delta(k))
    rep = fb.check_casimir(data, e).extend(fb.check_frobenius_system(data, system))
    verdict = "Frobenius system" if rep.ok else "rejected: " + rep.first_failure().describe()
    print(f"{show(e):45s} with delta_{labels[k]:4s} {verdict}")

print()
for e in (inverse_pairs, shifted_pairs):
    t = ig.integral_from_casimir(data, e)
    print(f"integral of {show(e)}: {[la.fmt(v) for v in t[O]]}")

t = ig.standard_integral(data, "left")
back = ig.casimir_from_integral(data, t)
print(f"Casimir of that integral: {show(back)}")
print("matches the first:", back.equals(inverse_pairs), " matches the second:", back.equals(shifted_pairs))
