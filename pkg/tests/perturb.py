"""Single-entry perturbations of fixture structure constants."""

import random

from hopfcat import gallery
from hopfcat.linalg import Q
from hopfcat.vcat import AxiomSet

# layer field -> axiom set that constrains it
GUARDS = {
    "comp": AxiomSet.SEMI_HOPF,
    "unit": AxiomSet.SEMI_HOPF,
    "local_comult": AxiomSet.SEMI_HOPF,
    "local_counit": AxiomSet.SEMI_HOPF,
    "antipode": AxiomSet.HOPF,
    "cocomp": AxiomSet.FROBENIUS,
    "counit": AxiomSet.FROBENIUS,
}


def targets(data):
    out = []
    for fieldname in GUARDS:
        layer = getattr(data, fieldname)
        if layer is None:
            continue
        for key, arr in layer.items():
            if arr.size:
                out.append((fieldname, key, arr.size))
    return out


def perturb(data, rng):
    """Copy ``data`` with one structure constant shifted by a nonzero rational."""
    fieldname, key, size = rng.choice(targets(data))
    pos = rng.randrange(size)
    delta = Q(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2]))
    layer = {k: v.copy() for k, v in getattr(data, fieldname).items()}
    flat = layer[key].reshape(-1)
    flat[pos] = flat[pos] + delta
    return data.with_layers(**{fieldname: layer}), (fieldname, key, pos, delta), GUARDS[fieldname]


def draws(count, seed=2024, names=None):
    rng = random.Random(seed)
    names = names or sorted(n for n in gallery.FIXTURES if n != "s3")
    for _ in range(count):
        name = rng.choice(names)
        yield name, rng
