"""Sweedler's four-dimensional algebra: left and right integrals differ and the Frobenius form is not symmetric."""

from hopfcat import frobenius as fb, gallery, hopf, integrals as ig, larson_sweedler as ls, linalg as la

data = gallery.fixture("sweedler")
labels = data.shape.basis_labels["*", "*"]


def show(v):
    coef = lambda c: "" if c == 1 else "-" if c == -1 else la.fmt(c)
    return " + ".join(f"{coef(c)}{lab}" for c, lab in zip(v, labels) if c != 0).replace("+ -", "- ")


s = data.antipode["*", "*"]
print("antipode squared is the identity:", la.equal(s @ s, la.identity(4)))
print("antipode to the fourth is the identity:", la.equal(s @ s @ s @ s, la.identity(4)))

left = ig.standard_integral(data, "left")
right = ig.standard_integral(data, "right")
print("left integral ", show(left["*", "*"]))
print("right integral", show(right["*", "*"]))

bare = data.without("antipode")
synth = ls.synthesize_antipode(bare, left, right)
print("antipode rebuilt from the integrals matches:", synth.equals(hopf.solve_antipode(bare)))

hf = ls.frobenius_from_hopf_integral(data, left)
print("Frobenius trace from the left integral:", show(hf.system.trace["*"]))
print("Frobenius checks:", hf.report.ok)
print("Calabi-Yau:", fb.calabi_yau_check(data, hf.system.trace).calabi_yau)
