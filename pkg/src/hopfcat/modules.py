"""Modules, opmodules and their Hopf versions, coinvariants and the fundamental theorem."""

from dataclasses import dataclass

import numpy as np

from .linalg import clean, identity, kernel_basis, kron, rank, stack, zeros
from .vcat import AxiomReport, AxiomSet, apply_at, column, dual_semi_hopf, permute, require_axioms, row


@dataclass(frozen=True)
class Module:
    """Right module: ``action[x, y, z]`` maps M(x,y) (x) A(y,z) to M(x,z)."""
    base: object
    dims: dict
    action: dict


@dataclass(frozen=True)
class Opmodule:
    """Right opmodule: ``coaction[x, y, z]`` maps M(x,z) to M(x,y) (x) C(y,z)."""
    base: object
    dims: dict
    coaction: dict


@dataclass(frozen=True)
class HopfModuleData:
    """Module over a semi-Hopf category plus ``coaction[x, y]``: M(x,y) -> M(x,y) (x) A(x,y)."""
    base: object
    dims: dict
    action: dict
    coaction: dict

    def module(self):
        return Module(self.base, self.dims, self.action)


@dataclass(frozen=True)
class HopfOpmoduleData:
    """Opmodule over a semi-Hopf opcategory plus ``action[x, y]``: M(x,y) (x) C(x,y) -> M(x,y)."""
    base: object
    dims: dict
    coaction: dict
    action: dict

    def opmodule(self):
        return Opmodule(self.base, self.dims, self.coaction)


def _shape_report(base, dims):
    rep = AxiomReport()
    for p in base.shape.pairs():
        rep.flag("carrier dimension", p, p in dims and dims[p] >= 0)
    return rep


# ---------------------------------------------------------------- axiom checks

def check_module(m):
    A, dm = m.base, m.dims
    rep = AxiomReport()
    for x, y, z, w in A.shape.tuples(4):
        n = dm[x, y] * A.d(y, z) * A.d(z, w)
        first = apply_at(m.action[x, z, w], apply_at(m.action[x, y, z], identity(n), 1, A.d(z, w)), 1, 1)
        second = apply_at(m.action[x, y, w], apply_at(A.comp[y, z, w], identity(n), dm[x, y], 1), 1, 1)
        rep.compare("action associative", (x, y, z, w), first, second)
    for x, y in A.shape.pairs():
        unit = m.action[x, y, y] @ kron(identity(dm[x, y]), column(A.unit[y]))
        rep.compare("action unital", (x, y), clean(unit), identity(dm[x, y]))
    return rep


def check_opmodule(n):
    C, dm = n.base, n.dims
    rep = AxiomReport()
    for x, y, z, w in C.shape.tuples(4):
        first = apply_at(n.coaction[x, y, z], n.coaction[x, z, w], 1, C.d(z, w))
        second = apply_at(C.cocomp[y, z, w], n.coaction[x, y, w], dm[x, y], 1)
        rep.compare("coaction coassociative", (x, y, z, w), first, second)
    for x, y in C.shape.pairs():
        counit = apply_at(row(C.counit[y]), n.coaction[x, y, y], dm[x, y], 1)
        rep.compare("coaction counital", (x, y), counit, identity(dm[x, y]))
    return rep


def check_hopf_module(m):
    A, dm = m.base, m.dims
    rep = check_module(m.module())
    for x, y in A.shape.pairs():
        d, r = A.d(x, y), m.coaction[x, y]
        rep.compare("local coaction coassociative", (x, y),
                    apply_at(r, r, 1, d), apply_at(A.local_comult[x, y], r, dm[x, y], 1))
        rep.compare("local coaction counital", (x, y),
                    apply_at(row(A.local_counit[x, y]), r, dm[x, y], 1), identity(dm[x, y]))
    for x, y, z in A.shape.tuples(3):
        dxy, dyz = A.d(x, y), A.d(y, z)
        lhs = clean(m.coaction[x, z] @ m.action[x, y, z])
        t = apply_at(A.local_comult[y, z], apply_at(m.coaction[x, y], identity(dm[x, y] * dyz), 1, dyz), dm[x, y] * dxy, 1)
        t = permute(t, [dm[x, y], dxy, dyz, dyz], [0, 2, 1, 3])
        t = apply_at(A.comp[x, y, z], apply_at(m.action[x, y, z], t, 1, dxy * dyz), dm[x, z], 1)
        rep.compare("hopf module compatibility", (x, y, z), lhs, t)
    return rep


def check_hopf_opmodule(n):
    C, dm = n.base, n.dims
    rep = check_opmodule(n.opmodule())
    for x, y in C.shape.pairs():
        d, a = C.d(x, y), n.action[x, y]
        first = apply_at(a, apply_at(a, identity(dm[x, y] * d * d), 1, d), 1, 1)
        second = apply_at(a, apply_at(C.local_mult[x, y], identity(dm[x, y] * d * d), dm[x, y], 1), 1, 1)
        rep.compare("local action associative", (x, y), first, second)
        unit = a @ kron(identity(dm[x, y]), column(C.local_unit[x, y]))
        rep.compare("local action unital", (x, y), clean(unit), identity(dm[x, y]))
    for x, y, z in C.shape.tuples(3):
        dxy, dyz, dxz = C.d(x, y), C.d(y, z), C.d(x, z)
        lhs = clean(n.coaction[x, y, z] @ n.action[x, z])
        t = apply_at(C.cocomp[x, y, z], apply_at(n.coaction[x, y, z], identity(dm[x, z] * dxz), 1, dxz), dm[x, y] * dyz, 1)
        t = permute(t, [dm[x, y], dyz, dxy, dyz], [0, 2, 1, 3])
        t = apply_at(C.local_mult[y, z], apply_at(n.action[x, y], t, 1, dyz * dyz), dm[x, y], 1)
        rep.compare("hopf opmodule compatibility", (x, y, z), lhs, t)
    return rep


# ---------------------------------------------------------------- examples

def regular_module(data):
    dims = {p: data.d(*p) for p in data.shape.pairs()}
    coaction = dict(data.local_comult) if data.has("local_comonoid") else {}
    return HopfModuleData(data, dims, dict(data.comp), coaction)


def free_module(data, sizes):
    """M(x,y) = N_x (x) A(x,y) with action and coaction on the second factor."""
    S = data.shape
    dims = {(x, y): sizes[x] * S.d(x, y) for x, y in S.pairs()}
    action = {(x, y, z): apply_at(data.comp[x, y, z], identity(dims[x, y] * S.d(y, z)), sizes[x], 1)
              for x, y, z in S.tuples(3)}
    coaction = {(x, y): apply_at(data.local_comult[x, y], identity(dims[x, y]), sizes[x], 1)
                for x, y in S.pairs()}
    return HopfModuleData(data, dims, action, coaction)


def zero_module(data):
    S = data.shape
    dims = {p: 0 for p in S.pairs()}
    return HopfModuleData(data, dims,
                          {(x, y, z): zeros(0, 0) for x, y, z in S.tuples(3)},
                          {(x, y): zeros(0, 0) for x, y in S.pairs()})


def _m3(data, x, y, z):
    return data.comp[x, y, z].reshape(data.d(x, z), data.d(x, y), data.d(y, z))


def _d3(data, x, y):
    d = data.d(x, y)
    return data.local_comult[x, y].reshape(d, d, d)


def standard_structures(data):
    """The two Hopf module structures on the duals of the homs and the three opmodule
    structures over the dual opcategory, keyed H1, H2, Hstar1, Hstar2, Cstarop."""
    require_axioms(data, AxiomSet.HOPF)
    S, s = data.shape, data.antipode
    C = dual_semi_hopf(data, check=False)
    out = {}

    # M(x,y) = dual of A(x,y): (f . b)(c) = f(c s(b)), coaction from the local comultiplication
    dims = {(x, y): S.d(x, y) for x, y in S.pairs()}
    act, co = {}, {}
    for x, y, z in S.tuples(3):
        M = _m3(data, x, z, y)
        act[x, y, z] = clean(np.einsum("ikl,lj->kij", M, s[y, z]).reshape(S.d(x, z), S.d(x, y) * S.d(y, z)))
    for x, y in S.pairs():
        d = S.d(x, y)
        co[x, y] = clean(_d3(data, x, y).transpose(2, 0, 1).reshape(d * d, d))
    out["Hstar1"] = HopfModuleData(data, dims, act, co)

    # M(x,y) = dual of A(y,x): (f . b)(c) = f(b c)
    dims = {(x, y): S.d(y, x) for x, y in S.pairs()}
    act, co = {}, {}
    for x, y, z in S.tuples(3):
        M = _m3(data, y, z, x)
        act[x, y, z] = clean(M.transpose(2, 0, 1).reshape(S.d(z, x), S.d(y, x) * S.d(y, z)))
    for x, y in S.pairs():
        dyx, dxy = S.d(y, x), S.d(x, y)
        co[x, y] = clean(np.einsum("iqk,lq->kli", _d3(data, y, x), s[y, x]).reshape(dyx * dxy, dyx))
    out["Hstar2"] = HopfModuleData(data, dims, act, co)

    # N(x,y) = A(x,y) over the dual opcategory: a |-> sum_j a b_j (x) b_j*
    dims = {(x, y): S.d(x, y) for x, y in S.pairs()}
    co, act = {}, {}
    for x, y, z in S.tuples(3):
        M = _m3(data, x, z, y)  # [k, i, j]: a_k in a_i b_j
        co[x, y, z] = clean(M.transpose(0, 2, 1).reshape(S.d(x, y) * S.d(z, y), S.d(x, z)))
    for x, y in S.pairs():
        d = S.d(x, y)
        act[x, y] = clean(np.einsum("pki,jp->kij", _d3(data, x, y), s[x, y]).reshape(d, d * S.d(y, x)))
    out["H1"] = HopfOpmoduleData(C, dims, co, act)

    # N(x,y) = A(y,x)
    dims = {(x, y): S.d(y, x) for x, y in S.pairs()}
    co, act = {}, {}
    for x, y, z in S.tuples(3):
        M = _m3(data, y, z, x)  # [k, l, i]
        co[x, y, z] = clean(np.einsum("kli,lj->kji", M, s[z, y]).reshape(S.d(y, x) * S.d(z, y), S.d(z, x)))
    for x, y in S.pairs():
        d = S.d(y, x)
        act[x, y] = clean(_d3(data, y, x).transpose(0, 2, 1).reshape(d, d * d))
    out["H2"] = HopfOpmoduleData(C, dims, co, act)

    # N(x,y) = dual of C(y,x), built from the dual opcategory's own structure maps
    dims = {(x, y): C.d(y, x) for x, y in S.pairs()}
    co, act = {}, {}
    for x, y in S.pairs():
        d = C.d(y, x)
        MU = C.local_mult[y, x].reshape(d, d, d)
        act[x, y] = clean(np.einsum("ikl,lj->kij", MU, C.antipode[x, y]).reshape(d, d * C.d(x, y)))
    for x, y, z in S.tuples(3):
        DC = C.cocomp[y, z, x].reshape(C.d(y, z), C.d(z, x), C.d(y, x))  # [l, k, i]
        co[x, y, z] = clean(DC.transpose(2, 0, 1).reshape(C.d(y, x) * C.d(y, z), C.d(z, x)))
    out["Cstarop"] = HopfOpmoduleData(C, dims, co, act)
    return out


# ---------------------------------------------------------------- coinvariants

def coinvariants(m, x):
    """Kernel of the local coaction minus m |-> m (x) 1 on M(x,x)."""
    d = m.dims[x, x]
    if d == 0:
        return []
    trivial = kron(identity(d), column(m.base.unit[x]))
    return kernel_basis(clean(m.coaction[x, x] - trivial))


def opmodule_coinvariants(n, x):
    """Families (v_xy)_y with coaction(v_xz) = v_xy (x) 1 for all y, z, as concatenated vectors."""
    C, dm = n.base, n.dims
    objs = C.objects
    offsets, total = {}, 0
    for y in objs:
        offsets[y] = total
        total += dm[x, y]
    if total == 0:
        return []
    blocks = []
    for y in objs:
        for z in objs:
            rows = dm[x, y] * C.d(y, z)
            block = zeros(rows, total)
            block[:, offsets[z]:offsets[z] + dm[x, z]] += n.coaction[x, y, z]
            block[:, offsets[y]:offsets[y] + dm[x, y]] -= kron(identity(dm[x, y]), column(C.local_unit[y, z]))
            blocks.append(clean(block))
    return kernel_basis(stack(blocks, total))


def split_coinvariant(n, x, v):
    out, k = {}, 0
    for y in n.base.objects:
        out[y] = v[k:k + n.dims[x, y]]
        k += n.dims[x, y]
    return out


def fundamental_iso_check(m):
    """beta: coinvariants (x) A(x,y) -> M(x,y) is an isomorphism for every pair."""
    rep = AxiomReport()
    if isinstance(m, HopfModuleData):
        A = m.base
        for x in A.objects:
            basis = coinvariants(m, x)
            r = len(basis)
            incl = np.column_stack(basis) if r else zeros(m.dims[x, x], 0)
            for y in A.objects:
                beta = apply_at(m.action[x, x, y], kron(incl, identity(A.d(x, y))), 1, 1) \
                    if r else zeros(m.dims[x, y], 0)
                rep.flag("fundamental iso", (x, y), beta.shape[0] == beta.shape[1] and rank(beta) == beta.shape[0])
                rep.flag("dimension law", (x, y), m.dims[x, y] == r * A.d(x, y))
    else:
        C = m.base
        for x in C.objects:
            basis = [split_coinvariant(m, x, v) for v in opmodule_coinvariants(m, x)]
            r = len(basis)
            for y in C.objects:
                if r:
                    incl = np.column_stack([b[y] for b in basis])
                    beta = clean(m.action[x, y] @ kron(incl, identity(C.d(x, y))))
                else:
                    beta = zeros(m.dims[x, y], 0)
                rep.flag("fundamental iso", (x, y), beta.shape[0] == beta.shape[1] and rank(beta) == beta.shape[0])
                rep.flag("dimension law", (x, y), m.dims[x, y] == r * C.d(x, y))
    return rep


# ---------------------------------------------------------------- module <-> opmodule over the dual

def transport_module_opmodule(m, dual_base=None):
    """Action M(x,z) (x) A(z,y) -> M(x,y) read as a coaction M(x,z) -> M(x,y) (x) A(z,y)*."""
    if isinstance(m, HopfModuleData):
        m = m.module()
    A = m.base
    C = dual_base if dual_base is not None else _dual_category(A)
    co = {}
    for x, y, z in A.shape.tuples(3):
        P = m.action[x, z, y].reshape(m.dims[x, y], m.dims[x, z], A.d(z, y))
        co[x, y, z] = clean(P.transpose(0, 2, 1).reshape(m.dims[x, y] * A.d(z, y), m.dims[x, z]))
    return Opmodule(C, dict(m.dims), co)


def transport_opmodule_module(n, base):
    """Inverse of ``transport_module_opmodule``; ``base`` is the original category."""
    act = {}
    for x, y, z in base.shape.tuples(3):
        P = n.coaction[x, y, z].reshape(n.dims[x, y], base.d(z, y), n.dims[x, z])
        act[x, z, y] = clean(P.transpose(0, 2, 1).reshape(n.dims[x, y], n.dims[x, z] * base.d(z, y)))
    return Module(base, dict(n.dims), act)


def _dual_category(A):
    from .vcat import dual
    keep = [l for l in ("opcategory", "local_comonoid", "local_monoid", "antipode") if A.has(l)]
    return dual(A.without(*keep))
