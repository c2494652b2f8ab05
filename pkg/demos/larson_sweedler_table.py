"""Every fixture against the eight equivalent conditions."""

from hopfcat import gallery, larson_sweedler as ls

keys = [k for k, _ in ls.CONDITIONS]
print(f"{'fixture':28s} " + " ".join(f"{k:>4s}" for k in keys) + "  consistent  Frobenius")
for name in sorted(gallery.FIXTURES):
    rep = ls.ls_report(gallery.fixture(name))
    marks = " ".join(f"{'yes' if rep.conditions[k] else '-':>4s}" for k in keys)
    print(f"{rep.name:28s} {marks}  {str(rep.consistent):10s}  {rep.category_frobenius}")
print()
for k, meaning in ls.CONDITIONS:
    print(f"{k:>4s}  {meaning}")
