"""Casimir families, traces, Frobenius systems and bilinear forms on linear categories."""

from dataclasses import dataclass

import numpy as np

from .linalg import Q, clean, identity, invert, kron, rank, zeros, NotInvertible
from .vcat import (AxiomReport, AxiomSet, VCatData, VGraphShape, apply_at, column, dual, permute, require_axioms,
                   row, verify_axioms)


@dataclass(frozen=True)
class CasimirFamily:
    """``tensors[x, y]`` lies in hom (x,y) (x) hom (y,x), row-major."""
    tensors: dict

    def __getitem__(self, key):
        return self.tensors[key]

    def matrix(self, data, x, y):
        return self.tensors[x, y].reshape(data.d(x, y), data.d(y, x))

    def scale(self, c):
        return CasimirFamily({k: clean(v * c) for k, v in self.tensors.items()})

    def equals(self, other):
        return self.tensors.keys() == other.tensors.keys() and all(
            v.shape == other.tensors[k].shape and not np.any(v != other.tensors[k])
            for k, v in self.tensors.items())


@dataclass(frozen=True)
class TraceFamily:
    """``functionals[x]`` is a linear form on hom (x,x)."""
    functionals: dict

    def __getitem__(self, x):
        return self.functionals[x]

    def scale(self, c):
        return TraceFamily({k: clean(v * c) for k, v in self.functionals.items()})

    def equals(self, other):
        return self.functionals.keys() == other.functionals.keys() and all(
            not np.any(v != other.functionals[k]) for k, v in self.functionals.items())


@dataclass(frozen=True)
class FrobeniusSystem:
    casimir: CasimirFamily
    trace: TraceFamily


@dataclass(frozen=True)
class BilinearForm:
    """``forms[x, y]`` pairs hom (x,y) with hom (y,x); stored as a row of length d(x,y) d(y,x)."""
    forms: dict

    def __getitem__(self, key):
        return self.forms[key]

    def gram(self, data, x, y):
        return self.forms[x, y].reshape(data.d(x, y), data.d(y, x))


def casimir_of(data, pairs_to_vectors):
    return CasimirFamily({k: clean(np.asarray(v, dtype=object).reshape(-1)) for k, v in pairs_to_vectors.items()})


# ---------------------------------------------------------------- Casimir checks

def _left_insert(data, e, x, z, y):
    """a |-> a e1 (x) e2 for a in hom (x,z), e = e^{zy}."""
    dxz, dyz = data.d(x, z), data.d(y, z)
    t = kron(identity(dxz), column(e[z, y]))
    return apply_at(data.comp[x, z, y], t, 1, dyz)


def check_casimir(data, e):
    """a e^{zy}_1 (x) e^{zy}_2 = e^{xy}_1 (x) e^{xy}_2 a for every a in hom (x,z)."""
    rep = AxiomReport()
    for x, z, y in data.shape.tuples(3):
        lhs = _left_insert(data, e, x, z, y)
        t = kron(column(e[x, y]), identity(data.d(x, z)))
        rhs = apply_at(data.comp[y, x, z], t, data.d(x, y), 1)
        rep.compare("casimir", (x, z, y), lhs, rhs)
    return rep


def check_frobenius_system(data, system):
    """Both triangle identities nu(e1) e2 = 1 = e1 nu(e2) on every endo-hom."""
    rep = AxiomReport()
    for x in data.objects:
        E = system.casimir.matrix(data, x, x)
        nu = system.trace[x]
        u = data.unit[x]
        rep.compare("trace on first factor", (x,), clean(nu @ E) if E.size else zeros(0), u)
        rep.compare("trace on second factor", (x,), clean(E @ nu) if E.size else zeros(0), u)
    return rep


# ---------------------------------------------------------------- cocomposition <-> Casimir

def comult_from_casimir(data, e):
    """Cocomposition a |-> a e^{zy}_1 (x) e^{zy}_2 from hom (x,z) to hom (x,y) (x) hom (y,z)."""
    return {(x, y, z): _left_insert(data, e, x, z, y) for x, y, z in data.shape.tuples(3)}


def casimir_from_comult(data):
    data.require("opcategory")
    return CasimirFamily({(x, y): clean(data.cocomp[x, y, x] @ data.unit[x]) for x, y in data.shape.pairs()})


def frobenius_structure(data, system):
    """Attach the cocomposition induced by the Casimir family and the trace as counit."""
    return data.with_layers(cocomp=comult_from_casimir(data, system.casimir),
                            counit=dict(system.trace.functionals))


def system_from_structure(data):
    data.require("opcategory")
    return FrobeniusSystem(casimir_from_comult(data), TraceFamily(dict(data.counit)))


# ---------------------------------------------------------------- bilinear forms

def trace_to_form(data, trace):
    """Gamma_xy(a (x) b) = nu_x(a b)."""
    return BilinearForm({(x, y): clean(row(trace[x]) @ data.comp[x, y, x]).reshape(-1)
                         for x, y in data.shape.pairs()})


def form_to_trace(data, form):
    """nu_x(a) = Gamma_xx(1 (x) a)."""
    out = {}
    for x in data.objects:
        G = form.gram(data, x, x)
        out[x] = clean(data.unit[x] @ G) if G.size else zeros(0)
    return TraceFamily(out)


def check_balanced(data, form):
    """Gamma(a b, c) = Gamma(a, b c) for a, b, c in homs (x,y), (y,z), (z,x)."""
    rep = AxiomReport()
    for x, y, z in data.shape.tuples(3):
        dxy, dyz, dzx = data.d(x, y), data.d(y, z), data.d(z, x)
        n = dxy * dyz * dzx
        lhs = clean(row(form[x, z]) @ apply_at(data.comp[x, y, z], identity(n), 1, dzx))
        rhs = clean(row(form[x, y]) @ apply_at(data.comp[y, z, x], identity(n), dxy, 1))
        rep.compare("balanced", (x, y, z), lhs, rhs)
    return rep


def check_symmetric(data, form):
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        rep.compare("symmetric", (x, y), form.gram(data, x, y), form.gram(data, y, x).T)
    return rep


def check_nondegenerate(data, form):
    """Both curried maps hom (x,y) -> hom (y,x)* and back must be injective."""
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        G = form.gram(data, x, y)
        rep.flag("left non-degenerate", (x, y), rank(G) == data.d(x, y))
        rep.flag("right non-degenerate", (x, y), rank(G) == data.d(y, x))
    return rep


def casimir_from_form(data, form):
    """Dual-basis tensor of a non-degenerate balanced form."""
    out = {}
    for x, y in data.shape.pairs():
        # phi_yx psi_yx = 1 forces e^{xy} to be the inverse of the Gram matrix of hom (y,x)
        G = form.gram(data, y, x)
        try:
            out[x, y] = clean(invert(G)).reshape(-1)
        except (NotInvertible, ValueError):
            raise NotInvertible(f"form on ({y},{x}) is degenerate") from None
    return CasimirFamily(out)


def system_from_trace(data, trace):
    form = trace_to_form(data, trace)
    return FrobeniusSystem(casimir_from_form(data, form), trace)


@dataclass(frozen=True)
class CalabiYauVerdict:
    symmetric: bool
    nondegenerate: bool

    @property
    def calabi_yau(self):
        return self.symmetric and self.nondegenerate


def calabi_yau_check(data, trace):
    form = trace_to_form(data, trace)
    return CalabiYauVerdict(check_symmetric(data, form).ok, check_nondegenerate(data, form).ok)


def candidate_traces(data, attempts=40, seed=0):
    """Deterministic stream of trace families: all-ones, each dual basis element, then random."""
    S = data.shape
    yield TraceFamily({x: np.array([Q(1)] * S.d(x, x), dtype=object) for x in S.objects})
    width = max((S.d(x, x) for x in S.objects), default=0)
    for i in range(width):
        yield TraceFamily({x: np.array([Q(int(j == i)) for j in range(S.d(x, x))], dtype=object)
                           for x in S.objects})
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        yield TraceFamily({x: np.array([Q(int(v)) for v in rng.integers(-50, 51, S.d(x, x))], dtype=object)
                           for x in S.objects})


def find_frobenius_system(data, attempts=40, seed=0):
    """Search for a trace whose pairings are all non-degenerate.

    Balanced forms are exactly those induced by traces, so the category is
    Frobenius iff some trace works; non-degeneracy is a non-vanishing
    polynomial condition, so random integer traces find one with high
    probability.  Returns None when the search gives up.
    """
    require_axioms(data, AxiomSet.CATEGORY)
    if any(data.d(x, y) != data.d(y, x) for x, y in data.shape.pairs()):
        return None
    for trace in candidate_traces(data, attempts, seed):
        if check_nondegenerate(data, trace_to_form(data, trace)).ok:
            return system_from_trace(data, trace)
    return None


def frobenius_report(data, system):
    """Casimir, triangle and induced FROBENIUS axiom checks in one report."""
    rep = check_casimir(data, system.casimir)
    rep.extend(check_frobenius_system(data, system))
    if rep.ok:
        rep.extend(verify_axioms(frobenius_structure(data, system), AxiomSet.FROBENIUS))
    return rep


# ---------------------------------------------------------------- psi and phi

def psi_map(data, trace, x, y):
    """a |-> nu_x(a -) from hom (x,y) to the dual of hom (y,x)."""
    dxy, dyx = data.d(x, y), data.d(y, x)
    G = clean(row(trace[x]) @ data.comp[x, y, x]).reshape(dxy, dyx)
    return clean(G.T)


def phi_map(data, e, x, y):
    """f |-> f(e1) e2 from the dual of hom (y,x) to hom (x,y), with e = e^{yx}."""
    return clean(e[y, x].reshape(data.d(y, x), data.d(x, y)).T)


def psi_phi(data, system):
    psi = {(x, y): psi_map(data, system.trace, x, y) for x, y in data.shape.pairs()}
    phi = {(x, y): phi_map(data, system.casimir, x, y) for x, y in data.shape.pairs()}
    return psi, phi


def dual_right_action(data, y, z, x):
    """(f . b)(c) = f(b c): dual of hom (y,x) tensor hom (y,z) -> dual of hom (z,x)."""
    dyx, dyz, dzx = data.d(y, x), data.d(y, z), data.d(z, x)
    M = data.comp[y, z, x].reshape(dyx, dyz, dzx)
    return clean(M.transpose(2, 0, 1).reshape(dzx, dyx * dyz))


def frobenius_iso_check(data, system):
    psi, phi = psi_phi(data, system)
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        d = data.d(x, y)
        if psi[x, y].shape != (data.d(y, x), d):
            rep.flag("psi square", (x, y), False)
            continue
        rep.compare("phi after psi", (x, y), clean(phi[x, y] @ psi[x, y]), identity(d))
        rep.compare("psi after phi", (x, y), clean(psi[x, y] @ phi[x, y]), identity(data.d(y, x)))
    for x, y, z in data.shape.tuples(3):
        lhs = clean(psi[x, z] @ data.comp[x, y, z])
        rhs = clean(dual_right_action(data, y, z, x) @ np.kron(psi[x, y], identity(data.d(y, z))))
        rep.compare("psi right linear", (x, y, z), lhs, rhs)
    return rep


def opcat_iso_check(data, system):
    """psi carries the Casimir cocomposition and trace to the opcategory structure of the dual."""
    psi, _ = psi_phi(data, system)
    cocomp = comult_from_casimir(data, system.casimir)
    D = dual(data.without(*[l for l in ("opcategory", "local_comonoid", "local_monoid", "antipode") if data.has(l)]))
    rep = AxiomReport()
    for x, y, z in data.shape.tuples(3):
        lhs = clean(np.kron(psi[x, y], psi[y, z]) @ cocomp[x, y, z])
        rhs = clean(D.cocomp[x, y, z] @ psi[x, z])
        rep.compare("psi preserves cocomposition", (x, y, z), lhs, rhs)
    for x in data.objects:
        rep.compare("psi preserves counit", (x,), clean(row(D.counit[x]) @ psi[x, x]).reshape(-1), system.trace[x])
    return rep


# ---------------------------------------------------------------- local Frobenius on dual homs

def local_frobenius_check(data, t):
    """For each pair, the dual of hom (y,x) is Frobenius with trace f |-> f(s_xy t^xy).

    The algebra structure is the local monoid of the dual opcategory, i.e. the
    convolution (f g)(a) = f(a2) g(a1).  Also checks that f |-> f(s(t1)) s(t2)
    from the dual of hom (y,x) to hom (y,x) is bijective and intertwines the
    right action a . g = a1 g(a2).
    """
    require_axioms(data, AxiomSet.HOPF)
    s = data.antipode
    C = dual(data.without("antipode"))
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        d = data.d(y, x)
        if d == 0:
            continue
        mult, unit = C.local_mult[x, y], C.local_unit[x, y]
        trace = clean(s[x, y] @ t[x, y])
        o = "*"
        alg = VCatData(VGraphShape((o,), {(o, o): d}), comp={(o, o, o): mult}, unit={o: unit}, name="local")
        form = trace_to_form(alg, TraceFamily({o: trace}))
        nondeg = check_nondegenerate(alg, form)
        rep.flag("local trace non-degenerate", (x, y), nondeg.ok)
        if nondeg.ok:
            system = FrobeniusSystem(casimir_from_form(alg, form), TraceFamily({o: trace}))
            rep.flag("local Frobenius axioms", (x, y), frobenius_report(alg, system).ok)
        dt = clean(data.local_comult[x, y] @ column(t[x, y]))
        ss = apply_at(s[x, y], apply_at(s[x, y], dt, 1, data.d(x, y)), d, 1).reshape(d, d)
        psi = clean(ss.T)
        rep.flag("local psi bijective", (x, y), rank(psi) == d)
        act = clean(np.einsum("pji->pij", data.local_comult[y, x].reshape(d, d, d)).reshape(d, d * d))
        rep.compare("local psi linear", (x, y), clean(psi @ mult), clean(act @ np.kron(psi, identity(d))))
    return rep


# ---------------------------------------------------------------- modules <-> opmodules

def transport_frobenius_modules(data, system, module):
    """Coaction m |-> m e^{zy}_1 (x) e^{zy}_2 from the action of a module."""
    from .modules import Opmodule

    e = system.casimir
    coaction = {}
    for x, y, z in data.shape.tuples(3):
        dm = module.dims
        t = kron(identity(dm[x, z]), column(e[z, y]))
        coaction[x, y, z] = apply_at(module.action[x, z, y], t, 1, data.d(y, z))
    return Opmodule(frobenius_structure(data, system), dict(module.dims), coaction)


def transport_frobenius_opmodules(data, system, opmodule):
    """Action m (x) a |-> m_0 nu_y(m_1 a) from the coaction of an opmodule."""
    from .modules import Module

    nu = system.trace
    action = {}
    dm = opmodule.dims
    for x, z, y in data.shape.tuples(3):
        # coaction (x,y,z) takes M(x,z) to M(x,y) (x) A(y,z); pair with a in A(z,y)
        pairing = clean(row(nu[y]) @ data.comp[y, z, y])
        t = apply_at(opmodule.coaction[x, y, z], identity(dm[x, z] * data.d(z, y)), 1, data.d(z, y))
        action[x, z, y] = apply_at(pairing, t, dm[x, y], 1)
    return Module(data, dict(dm), action)


# ---------------------------------------------------------------- packing

def pack_frobenius(data):
    """Packed algebra whose comultiplication sends a in hom (x,y) to the sum over z of its cocompositions."""
    from .hopf import PackedAlgebra, flat_index

    require_axioms(data, AxiomSet.FROBENIUS)
    S = data.shape
    index, labels, N = flat_index(S)
    off = {(x, y): index.get((x, y, 0)) for x, y in S.pairs()}
    mult = zeros(N, N * N)
    for x, y, z in S.tuples(3):
        m = data.comp[x, y, z]
        for i in range(S.d(x, y)):
            for j in range(S.d(y, z)):
                for k in range(S.d(x, z)):
                    mult[off[x, z] + k, (off[x, y] + i) * N + off[y, z] + j] = m[k, i * S.d(y, z) + j]
    comult = zeros(N * N, N)
    for x, z, y in S.tuples(3):
        D = data.cocomp[x, z, y]
        for a in range(S.d(x, y)):
            for i in range(S.d(x, z)):
                for j in range(S.d(z, y)):
                    comult[(off[x, z] + i) * N + off[z, y] + j, off[x, y] + a] = D[i * S.d(z, y) + j, a]
    unit = zeros(N)
    counit = zeros(N)
    for x in S.objects:
        for i in range(S.d(x, x)):
            unit[off[x, x] + i] = data.unit[x][i]
            counit[off[x, x] + i] = data.counit[x][i]
    return PackedAlgebra(N, index, mult, unit, comult, counit, None, labels)


def packed_frobenius_category(p, name="packed"):
    o = "*"
    shape = VGraphShape((o,), {(o, o): p.dimension}, {(o, o): p.labels})
    return VCatData(shape, comp={(o, o, o): p.mult}, unit={o: p.unit},
                    cocomp={(o, o, o): p.comult}, counit={o: p.counit}, name=name)


def check_frobenius_algebra(p):
    return verify_axioms(packed_frobenius_category(p), AxiomSet.FROBENIUS)


# ---------------------------------------------------------------- duality

def dual_frobenius_certificate(data, system=None):
    """The dual (hom (x,y) -> dual of hom (y,x)) of Frobenius data passes FROBENIUS with matching dimensions.

    Data without a cocomposition is first given one from ``system`` or from a search.
    """
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        rep.flag("hom dimensions symmetric", (x, y), data.d(x, y) == data.d(y, x))
    if system is not None:
        data = frobenius_structure(data, system)
    elif not data.has("opcategory"):
        found = find_frobenius_system(data)
        rep.flag("Frobenius structure found", (), found is not None)
        if found is None:
            return rep
        data = frobenius_structure(data, found)
    layers = [l for l in ("local_comonoid", "local_monoid", "antipode") if data.has(l)]
    rep.extend(verify_axioms(dual(data.without(*layers)), AxiomSet.FROBENIUS))
    return rep


def dual_basis_check(data, system):
    """a = a e1 nu(e2) for a in hom (x,y), using e^{yy}."""
    rep = AxiomReport()
    for x, y in data.shape.pairs():
        d = data.d(x, y)
        t = apply_at(data.comp[x, y, y], kron(identity(d), column(system.casimir[y, y])), 1, data.d(y, y))
        out = apply_at(row(system.trace[y]), t, d, 1)
        rep.compare("dual basis", (x, y), out, identity(d))
    return rep
