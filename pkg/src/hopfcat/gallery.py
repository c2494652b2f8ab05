"""Worked examples: group and monoid algebras, groupoid categories and the
categories attached to graded Hopf and Frobenius algebras."""

import itertools
from dataclasses import dataclass

import numpy as np

from .linalg import identity, invert, matrix, vector, zeros, NotInvertible
from .vcat import AxiomReport, AxiomSet, VCatData, VGraphShape, apply_at, kron, permute, verify_axioms


class InvalidTable(ValueError):
    pass


class InvalidGroupoid(ValueError):
    pass


class InvalidGAlgebra(ValueError):
    pass


class InvalidForm(ValueError):
    pass


# ---------------------------------------------------------------- tables

@dataclass(frozen=True)
class Table:
    """Multiplication table on labelled elements; ``product[i][j]`` is an index."""
    labels: tuple
    product: tuple

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(str(lab) for lab in self.labels))
        object.__setattr__(self, "product", tuple(tuple(r) for r in self.product))
        if len(self.product) != n or any(len(r) != n for r in self.product):
            raise InvalidTable("table must be square with one row per element")
        if any(not 0 <= v < n for r in self.product for v in r):
            raise InvalidTable("table entries must index elements")
        p = self.product
        for a, b, c in itertools.product(range(n), repeat=3):
            if p[p[a][b]][c] != p[a][p[b][c]]:
                raise InvalidTable(f"not associative at {self.labels[a]},{self.labels[b]},{self.labels[c]}")
        if self.identity is None:
            raise InvalidTable("no identity element")

    def __len__(self):
        return len(self.labels)

    @property
    def identity(self):
        n = len(self.labels)
        for e in range(n):
            if all(self.product[e][a] == a and self.product[a][e] == a for a in range(n)):
                return e
        return None

    def inverse(self, a):
        e = self.identity
        for b in range(len(self.labels)):
            if self.product[a][b] == e and self.product[b][a] == e:
                return b
        return None

    @property
    def is_group(self):
        return all(self.inverse(a) is not None for a in range(len(self.labels)))

    def mul(self, a, b):
        return self.product[a][b]


def cyclic_group(n, symbol="g"):
    labels = ["e"] + [symbol if k == 1 else f"{symbol}^{k}" for k in range(1, n)]
    return Table(labels, [[(i + j) % n for j in range(n)] for i in range(n)])


def klein_four():
    labels = ["e", "a", "b", "c"]
    # elements as bit pairs, product is xor
    return Table(labels, [[i ^ j for j in range(4)] for i in range(4)])


def symmetric_group3():
    perms = list(itertools.permutations(range(3)))
    labels = ["e", "(12)", "(23)", "(123)", "(132)", "(13)"]
    order = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    assert sorted(order) == perms
    # (p q)(i) = p(q(i))
    prod = [[order.index(tuple(p[q[i]] for i in range(3))) for q in order] for p in order]
    return Table(labels, prod)


def idempotent_monoid():
    """M = {e, g} with g^2 = g."""
    return Table(["e", "g"], [[0, 1], [1, 1]])


def idempotent_monoid3():
    """{e, a, b} with a^2 = a, b^2 = b, ab = ba = b."""
    return Table(["e", "a", "b"], [[0, 1, 2], [1, 1, 2], [2, 2, 2]])


GROUPS = {"trivial": lambda: cyclic_group(1), "c2": lambda: cyclic_group(2), "c3": lambda: cyclic_group(3),
          "c4": lambda: cyclic_group(4), "klein4": klein_four, "s3": symmetric_group3}
MONOIDS = {"idempotent2": idempotent_monoid, "idempotent3": idempotent_monoid3}


def named_table(name):
    if name in GROUPS:
        return GROUPS[name]()
    if name in MONOIDS:
        return MONOIDS[name]()
    raise InvalidTable(f"unknown table {name!r}")


# ---------------------------------------------------------------- one-object examples

def _monoid_data(table, name, with_antipode):
    n = len(table)
    o = "*"
    mult = zeros(n, n * n)
    for i, j in itertools.product(range(n), repeat=2):
        mult[table.mul(i, j), i * n + j] = 1
    comult = zeros(n * n, n)
    for i in range(n):
        comult[i * n + i, i] = 1
    unit = zeros(n)
    unit[table.identity] = 1
    kw = {}
    if with_antipode:
        s = zeros(n, n)
        for i in range(n):
            s[table.inverse(i), i] = 1
        kw["antipode"] = {(o, o): s}
    shape = VGraphShape((o,), {(o, o): n}, {(o, o): table.labels})
    return VCatData(shape, comp={(o, o, o): mult}, unit={o: unit},
                    local_comult={(o, o): comult}, local_counit={(o, o): vector([1] * n)},
                    name=name, **kw)


def group_algebra(table, name=None):
    """kG with g -> g (x) g, counit 1 and antipode g -> g^-1."""
    if isinstance(table, str):
        name = name or f"k{table.upper()}"
        table = named_table(table)
    if not table.is_group:
        raise InvalidTable("not a group: some element has no inverse")
    return _monoid_data(table, name or "kG", True)


def function_algebra(table, name=None):
    """k^G: pointwise product on delta functions, delta_g -> sum over ab = g of
    delta_a (x) delta_b.  Commutative, and cocommutative only for abelian G."""
    if isinstance(table, str):
        name = name or f"k^{table.upper()}"
        table = named_table(table)
    n = len(table)
    o = "*"
    mult = zeros(n, n * n)
    comult = zeros(n * n, n)
    s = zeros(n, n)
    for i in range(n):
        mult[i, i * n + i] = 1
        s[table.inverse(i), i] = 1
    for a, b in itertools.product(range(n), repeat=2):
        comult[a * n + b, table.mul(a, b)] = 1
    counit = zeros(n)
    counit[table.identity] = 1
    shape = VGraphShape((o,), {(o, o): n}, {(o, o): tuple(f"d_{lab}" for lab in table.labels)})
    return VCatData(shape, comp={(o, o, o): mult}, unit={o: vector([1] * n)},
                    local_comult={(o, o): comult}, local_counit={(o, o): counit},
                    antipode={(o, o): s}, name=name or "k^G")


def monoid_bialgebra(table, name=None):
    """kM with grouplike comultiplication and no antipode attached."""
    if isinstance(table, str):
        name = name or {"idempotent2": "kM", "idempotent3": "kM3"}.get(table, f"k{table}")
        table = named_table(table)
    return _monoid_data(table, name or "kM", False)


# ---------------------------------------------------------------- groupoids

@dataclass(frozen=True)
class FiniteGroupoid:
    """``arrows[x, y]`` lists the arrows y -> x, so that g in G(x,y) and h in
    G(y,z) compose to gh in G(x,z)."""
    objects: tuple
    arrows: dict
    compose: dict
    identities: dict
    inverses: dict

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        homs = {}
        for x, y in itertools.product(self.objects, repeat=2):
            for g in self.arrows.get((x, y), ()):
                if g in homs:
                    raise InvalidGroupoid(f"arrow {g!r} appears twice")
                homs[g] = (x, y)
        object.__setattr__(self, "arrows", {(x, y): tuple(self.arrows.get((x, y), ()))
                                            for x, y in itertools.product(self.objects, repeat=2)})
        for x, y, z in itertools.product(self.objects, repeat=3):
            for g in self.arrows[x, y]:
                for h in self.arrows[y, z]:
                    gh = self.compose.get((g, h))
                    if gh is None or homs.get(gh) != (x, z):
                        raise InvalidGroupoid(f"{g}{h} missing or lands outside G({x},{z})")
        for x, y, z, w in itertools.product(self.objects, repeat=4):
            for g, h, k in itertools.product(self.arrows[x, y], self.arrows[y, z], self.arrows[z, w]):
                if self.compose[self.compose[g, h], k] != self.compose[g, self.compose[h, k]]:
                    raise InvalidGroupoid(f"composition not associative at {g},{h},{k}")
        for x in self.objects:
            e = self.identities.get(x)
            if homs.get(e) != (x, x):
                raise InvalidGroupoid(f"identity of {x} is not in G({x},{x})")
        for g, (x, y) in homs.items():
            if self.compose[self.identities[x], g] != g or self.compose[g, self.identities[y]] != g:
                raise InvalidGroupoid(f"identities do not act trivially on {g}")
            gi = self.inverses.get(g)
            if homs.get(gi) != (y, x) or self.compose[g, gi] != self.identities[x] \
                    or self.compose[gi, g] != self.identities[y]:
                raise InvalidGroupoid(f"{g} has no two-sided inverse")

    def hom(self, x, y):
        return self.arrows[x, y]


def pair_groupoid(n=2):
    objects = tuple(f"x{i}" for i in range(n)) if isinstance(n, int) else tuple(n)
    name = {(x, y): f"{x}<-{y}" for x, y in itertools.product(objects, repeat=2)}
    arrows = {(x, y): (name[x, y],) for x, y in name}
    compose = {(name[x, y], name[y, z]): name[x, z] for x, y, z in itertools.product(objects, repeat=3)}
    return FiniteGroupoid(objects, arrows, compose, {x: name[x, x] for x in objects},
                          {name[x, y]: name[y, x] for x, y in name})


def group_groupoid(table, obj="*"):
    if isinstance(table, str):
        table = named_table(table)
    labels = table.labels
    compose = {(labels[i], labels[j]): labels[table.mul(i, j)] for i, j in itertools.product(range(len(labels)), repeat=2)}
    return FiniteGroupoid((obj,), {(obj, obj): labels}, compose, {obj: labels[table.identity]},
                          {labels[i]: labels[table.inverse(i)] for i in range(len(labels))})


def action_groupoid(table, points, act):
    """Arrows (g, p): p -> g.p for a left action ``act(g_index, point) -> point``."""
    if isinstance(table, str):
        table = named_table(table)
    points = tuple(points)
    n = len(table)
    arrows = {}
    for i in range(n):
        for p in points:
            arrows.setdefault((act(i, p), p), []).append(f"{table.labels[i]}@{p}")

    def parse(g):
        lab, p = g.split("@")
        return table.labels.index(lab), p

    compose = {}
    inverses = {}
    for (x, y), gs in arrows.items():
        for g in gs:
            i, p = parse(g)
            inverses[g] = f"{table.labels[table.inverse(i)]}@{x}"
            for (y2, z), hs in arrows.items():
                if y2 != y:
                    continue
                for h in hs:
                    j, q = parse(h)
                    compose[g, h] = f"{table.labels[table.mul(i, j)]}@{q}"
    e = table.labels[table.identity]
    return FiniteGroupoid(points, arrows, compose, {p: f"{e}@{p}" for p in points}, inverses)


def disjoint_union(first, second):
    overlap = set(first.objects) & set(second.objects)
    if overlap:
        raise InvalidGroupoid(f"object labels overlap: {sorted(overlap)}")
    return FiniteGroupoid(first.objects + second.objects, {**first.arrows, **second.arrows},
                          {**first.compose, **second.compose}, {**first.identities, **second.identities},
                          {**first.inverses, **second.inverses})


def groupoid_category(g, name="kG"):
    """Groupoid algebra as a Hopf category with its canonical Frobenius
    cocomposition, counit and local monoid layers."""
    objs = g.objects
    dims = {(x, y): len(g.hom(x, y)) for x, y in itertools.product(objs, repeat=2)}
    index = {(x, y): {a: i for i, a in enumerate(g.hom(x, y))} for x, y in dims}
    comp, cocomp = {}, {}
    for x, y, z in itertools.product(objs, repeat=3):
        dxy, dyz, dxz = dims[x, y], dims[y, z], dims[x, z]
        m = zeros(dxz, dxy * dyz)
        for i, a in enumerate(g.hom(x, y)):
            for j, b in enumerate(g.hom(y, z)):
                m[index[x, z][g.compose[a, b]], i * dyz + j] = 1
        comp[x, y, z] = m
        dl = zeros(dxy * dyz, dxz)
        for k, a in enumerate(g.hom(x, z)):
            for j, b in enumerate(g.hom(y, z)):
                left = g.compose[a, g.inverses[b]]
                dl[index[x, y][left] * dyz + j, k] = 1
        cocomp[x, y, z] = dl
    unit, counit = {}, {}
    for x in objs:
        e = index[x, x][g.identities[x]]
        unit[x] = zeros(dims[x, x])
        unit[x][e] = 1
        counit[x] = unit[x].copy()
    local_comult, local_counit, local_mult, local_unit, antipode = {}, {}, {}, {}, {}
    for x, y in dims:
        d = dims[x, y]
        D = zeros(d * d, d)
        M = zeros(d, d * d)
        for i in range(d):
            D[i * d + i, i] = 1
            M[i, i * d + i] = 1
        local_comult[x, y], local_mult[x, y] = D, M
        local_counit[x, y] = vector([1] * d)
        local_unit[x, y] = vector([1] * d)
        s = zeros(dims[y, x], d)
        for i, a in enumerate(g.hom(x, y)):
            s[index[y, x][g.inverses[a]], i] = 1
        antipode[x, y] = s
    shape = VGraphShape(objs, dims, {k: tuple(g.hom(*k)) for k in dims})
    return VCatData(shape, comp=comp, unit=unit, cocomp=cocomp, counit=counit,
                    local_comult=local_comult, local_counit=local_counit,
                    local_mult=local_mult, local_unit=local_unit, antipode=antipode, name=name)


def c2_swap_action_groupoid():
    """C2 acting on two points by exchanging them."""
    table = cyclic_group(2)
    return action_groupoid(table, ("p", "q"), lambda i, pt: pt if i == 0 else {"p": "q", "q": "p"}[pt])


def c2_trivial_action_groupoid():
    table = cyclic_group(2)
    return action_groupoid(table, ("p", "q"), lambda i, pt: pt)


# ---------------------------------------------------------------- graded Hopf algebras

@dataclass(frozen=True)
class HopfGAlgebraData:
    """A family of coalgebras H_g indexed by a group, with multiplications
    H_g (x) H_h -> H_gh, a unit in H_e, antipodes H_g -> H_g^-1 and crossing
    isomorphisms H_h -> H_ghg^-1 (``crossing[g, h]``)."""
    group: Table
    dims: dict
    comult: dict
    counit: dict
    mult: dict
    unit: object
    antipode: dict
    crossing: dict = None
    labels: dict = None


def check_hopf_g_algebra(h):
    """Axioms checked on the induced category plus the crossing axioms."""
    G = h.group
    rep = verify_axioms(_g_category(h, "H~"), AxiomSet.HOPF)
    if h.crossing is None:
        return rep
    n = len(G)
    conj = lambda g, k: G.mul(G.mul(g, k), G.inverse(g))
    psi = h.crossing
    e = G.identity
    for g, k in itertools.product(range(n), repeat=2):
        P = psi[g, k]
        dk, dc = h.dims[k], h.dims[conj(g, k)]
        rep.compare("crossing comultiplicative", (g, k), h.comult[conj(g, k)] @ P, kron(P, P) @ h.comult[k])
        rep.compare("crossing counital", (g, k), (h.counit[conj(g, k)].reshape(1, -1) @ P),
                    h.counit[k].reshape(1, -1))
        for g2 in range(n):
            both = psi[g, conj(g2, k)] @ psi[g2, k]
            rep.compare("crossing composes", (g, g2, k), both, psi[G.mul(g, g2), k])
        if g == e:
            rep.compare("crossing identity", (k,), P, identity(dk))
        for l in range(n):
            lhs = psi[g, G.mul(k, l)] @ h.mult[k, l]
            rhs = h.mult[conj(g, k), conj(g, l)] @ kron(P, psi[g, l])
            rep.compare("crossing multiplicative", (g, k, l), lhs, rhs)
        del dc
    for g in range(n):
        rep.compare("crossing unital", (g,), psi[g, e] @ h.unit.reshape(-1, 1), h.unit.reshape(-1, 1))
    return rep


def _g_category(h, name, **extra):
    G = h.group
    objs = G.labels
    idx = {lab: i for i, lab in enumerate(objs)}
    grade = lambda x, y: G.mul(G.inverse(idx[x]), idx[y])
    dims = {(x, y): h.dims[grade(x, y)] for x, y in itertools.product(objs, repeat=2)}
    comp = {(x, y, z): h.mult[grade(x, y), grade(y, z)] for x, y, z in itertools.product(objs, repeat=3)}
    unit = {x: h.unit for x in objs}
    kw = {}
    if getattr(h, "comult", None) is not None:
        kw["local_comult"] = {(x, y): h.comult[grade(x, y)] for x, y in dims}
        kw["local_counit"] = {(x, y): h.counit[grade(x, y)] for x, y in dims}
    if getattr(h, "antipode", None) is not None:
        kw["antipode"] = {(x, y): h.antipode[grade(x, y)] for x, y in dims}
    labels = None
    if h.labels:
        labels = {(x, y): tuple(h.labels[grade(x, y)]) for x, y in dims}
    shape = VGraphShape(objs, dims, labels)
    kw.update(extra)
    return VCatData(shape, comp=comp, unit=unit, name=name, **kw)


def hopf_g_algebra_to_category(h, name=None, check=True):
    """Category on the group elements with hom (x,y) = H_{x^-1 y}."""
    if check:
        rep = check_hopf_g_algebra(h)
        if not rep.ok:
            raise InvalidGAlgebra(str(rep.first_failure().describe()))
    return _g_category(h, name or "H~")


def trivial_line_g_algebra(table=None):
    """H_g = k for every g with all structure maps the identity of k."""
    G = table or cyclic_group(2)
    n = len(G)
    one = matrix([[1]])
    idx = range(n)
    return HopfGAlgebraData(G, {g: 1 for g in idx}, {g: one for g in idx}, {g: vector([1]) for g in idx},
                            {(g, k): one for g in idx for k in idx}, vector([1]), {g: one for g in idx},
                            {(g, k): one for g in idx for k in idx},
                            {g: ("1",) for g in idx})


def group_graded_g_algebra(grading=None, fibre=None):
    """H_g = kK for every g in G, multiplication from K, grouplike coalgebra,
    crossing the identity (G abelian)."""
    G = grading or cyclic_group(2)
    K = fibre or cyclic_group(2)
    base = group_algebra(K)
    o = base.objects[0]
    n, m = len(G), len(K)
    s = base.antipode[o, o]
    return HopfGAlgebraData(G, {g: m for g in range(n)}, {g: base.local_comult[o, o] for g in range(n)},
                            {g: base.local_counit[o, o] for g in range(n)},
                            {(g, k): base.comp[o, o, o] for g in range(n) for k in range(n)},
                            base.unit[o], {g: s for g in range(n)},
                            {(g, k): identity(m) for g in range(n) for k in range(n)},
                            {g: K.labels for g in range(n)})


# ---------------------------------------------------------------- graded Frobenius algebras

@dataclass(frozen=True)
class FrobeniusGAlgebraData:
    """A G-graded algebra with ``form[g]`` the pairing A_g (x) A_{g^-1} -> k
    stored as a d_g x d_{g^-1} Gram matrix."""
    group: Table
    dims: dict
    mult: dict
    unit: object
    form: dict
    labels: dict = None


def frobenius_g_algebra_to_category(a, name=None):
    """Category with hom (x,y) = A_{x^-1 y}, carrying the Frobenius
    cocomposition and trace obtained from the restricted pairing."""
    from . import frobenius as fb

    G = a.group
    n = len(G)
    for g in range(n):
        gi = G.inverse(g)
        F = matrix(a.form[g])
        if F.shape != (a.dims[g], a.dims[gi]):
            raise InvalidForm(f"pairing on grade {G.labels[g]} has shape {F.shape}")
        if any(v != 0 for v in (F - matrix(a.form[gi]).T).flat):
            raise InvalidForm(f"pairing is not symmetric on grade {G.labels[g]}")
        try:
            invert(F)
        except (NotInvertible, ValueError):
            raise InvalidForm(f"pairing is degenerate on grade {G.labels[g]}") from None
    base = _g_category(a, name or "A~")
    idx = {lab: i for i, lab in enumerate(G.labels)}
    forms = {}
    for x, y in base.shape.pairs():
        g = G.mul(G.inverse(idx[x]), idx[y])
        forms[x, y] = matrix(a.form[g]).reshape(-1)
    form = fb.BilinearForm(forms)
    rep = fb.check_balanced(base, form)
    if not rep.ok:
        raise InvalidForm("pairing is not invariant: " + rep.first_failure().describe())
    system = fb.FrobeniusSystem(fb.casimir_from_form(base, form), fb.form_to_trace(base, form))
    return fb.frobenius_structure(base, system)


def group_algebra_g_algebra(table=None):
    """kG graded by G itself with the pairing (a, b) -> coefficient of e in ab."""
    G = table or cyclic_group(2)
    n = len(G)
    one = matrix([[1]])
    mult = {(g, k): one for g in range(n) for k in range(n)}
    form = {g: one for g in range(n)}
    return FrobeniusGAlgebraData(G, {g: 1 for g in range(n)}, mult, vector([1]), form,
                                 {g: (G.labels[g],) for g in range(n)})


def sweedler_algebra(name="H4"):
    """Four-dimensional Hopf algebra on 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
    g group-like and x (1, g)-primitive.  Neither commutative nor cocommutative,
    and its antipode has order four."""
    o = "*"
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    pos = {e: i for i, e in enumerate(elems)}
    mult = zeros(4, 16)
    for i, (a, b) in enumerate(elems):
        for j, (c, d) in enumerate(elems):
            if b + d < 2:
                mult[pos[(a + c) % 2, b + d], i * 4 + j] = -1 if b * c else 1
    comult = zeros(16, 4)
    comult[pos[0, 0] * 4 + pos[0, 0], 0] = 1
    comult[pos[1, 0] * 4 + pos[1, 0], 1] = 1
    comult[pos[0, 1] * 4 + pos[0, 0], 2] = 1
    comult[pos[1, 0] * 4 + pos[0, 1], 2] = 1
    comult[pos[1, 1] * 4 + pos[1, 0], 3] = 1
    comult[pos[0, 0] * 4 + pos[1, 1], 3] = 1
    s = zeros(4, 4)
    s[0, 0] = s[1, 1] = 1
    s[3, 2] = -1
    s[2, 3] = 1
    shape = VGraphShape((o,), {(o, o): 4}, {(o, o): ("1", "g", "x", "gx")})
    return VCatData(shape, comp={(o, o, o): mult}, unit={o: vector([1, 0, 0, 0])},
                    local_comult={(o, o): comult}, local_counit={(o, o): vector([1, 1, 0, 0])},
                    antipode={(o, o): s}, name=name)


def interval_category(name="interval"):
    """Linearised poset a < b: one arrow a -> b besides the identities, nothing back.
    Semi-Hopf with group-like arrows, but not Hopf and not Frobenius."""
    objs = ("a", "b")
    dims = {("a", "a"): 1, ("b", "b"): 1, ("a", "b"): 1, ("b", "a"): 0}
    labels = {("a", "a"): ("1a",), ("b", "b"): ("1b",), ("a", "b"): ("a<b",), ("b", "a"): ()}
    shape = VGraphShape(objs, dims, labels)
    comp = {}
    for x, y, z in itertools.product(objs, repeat=3):
        m = zeros(dims[x, z], dims[x, y] * dims[y, z])
        if m.size:
            m[0, 0] = 1
        comp[x, y, z] = m
    return VCatData(shape, comp=comp, unit={x: vector([1]) for x in objs},
                    local_comult={p: matrix([[1]]) if d else zeros(0, 0) for p, d in dims.items()},
                    local_counit={p: vector([1] * d) for p, d in dims.items()}, name=name)


# ---------------------------------------------------------------- named fixtures

def fixture(name):
    return FIXTURES[name]()


FIXTURES = {
    "trivial": lambda: group_algebra("trivial", "k"),
    "c2": lambda: group_algebra("c2", "kC2"),
    "c4": lambda: group_algebra("c4", "kC4"),
    "klein4": lambda: group_algebra("klein4", "kV4"),
    "s3": lambda: group_algebra("s3", "kS3"),
    "fun_s3": lambda: function_algebra("s3", "k^S3"),
    "km": lambda: monoid_bialgebra("idempotent2", "kM"),
    "km3": lambda: monoid_bialgebra("idempotent3", "kM3"),
    "pair2": lambda: groupoid_category(pair_groupoid(2), "pair groupoid on 2 objects"),
    "pair3": lambda: groupoid_category(pair_groupoid(3), "pair groupoid on 3 objects"),
    "c2_groupoid": lambda: groupoid_category(group_groupoid("c2"), "C2 as a groupoid"),
    "c2_action": lambda: groupoid_category(c2_swap_action_groupoid(), "C2 acting on two points"),
    "c2_disjoint": lambda: groupoid_category(c2_trivial_action_groupoid(), "C2 disjoint C2"),
    "g_line": lambda: hopf_g_algebra_to_category(trivial_line_g_algebra(), "C2-graded line"),
    "g_group": lambda: hopf_g_algebra_to_category(group_graded_g_algebra(), "C2-graded kC2"),
    "sweedler": sweedler_algebra,
    "interval": interval_category,
}

HOPF_FIXTURES = ["trivial", "c2", "c4", "klein4", "s3", "fun_s3", "pair2", "pair3", "c2_groupoid", "c2_action",
                 "c2_disjoint", "g_line", "g_group", "sweedler"]
