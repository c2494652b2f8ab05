"""Integral families, integral spaces and the maps p, q they induce."""

from dataclasses import dataclass

import numpy as np

from .linalg import clean, identity, invert, kernel_basis, rank, stack, zeros, NotInvertible
from .vcat import AxiomReport, AxiomSet, apply_at, column, permute, require_axioms, row, swap_map


@dataclass(frozen=True)
class IntegralFamily:
    """``vectors[x, y]`` is the component in hom (x,y)."""
    side: str
    vectors: dict

    def __getitem__(self, key):
        return self.vectors[key]

    def __add__(self, other):
        if self.side != other.side:
            raise ValueError("cannot add integral families of different sides")
        return IntegralFamily(self.side, {k: clean(v + other.vectors[k]) for k, v in self.vectors.items()})

    def scale(self, c):
        return IntegralFamily(self.side, {k: clean(v * c) for k, v in self.vectors.items()})

    def equals(self, other):
        return self.side == other.side and self.vectors.keys() == other.vectors.keys() and all(
            not np.any(v != other.vectors[k]) for k, v in self.vectors.items())

    def is_zero(self):
        return all(not np.any(v != 0) for v in self.vectors.values())


@dataclass(frozen=True)
class IntegralSpace:
    anchor: object
    side: str
    basis: list

    @property
    def dimension(self):
        return len(self.basis)


def zero_family(data, side):
    return IntegralFamily(side, {p: zeros(data.d(*p)) for p in data.shape.pairs()})


def _unknowns(data, pairs):
    offsets, k = {}, 0
    for p in pairs:
        offsets[p] = k
        k += data.d(*p)
    return offsets, k


def _space(data, anchor, side, pairs, blocks, n):
    basis = []
    for v in kernel_basis(stack(blocks, n)) if n else []:
        fam = zero_family(data, side).vectors
        offsets, _ = _unknowns(data, pairs)
        for p in pairs:
            fam[p] = clean(v[offsets[p]:offsets[p] + data.d(*p)])
        basis.append(IntegralFamily(side, fam))
    return IntegralSpace(anchor, side, basis)


def left_integral_space(data, z):
    """Families (t_xz)_x with a t_xz = e_wx(a) t_wz for every a in hom (w,x)."""
    require_axioms(data, AxiomSet.SEMI_HOPF)
    S = data.shape
    pairs = [(x, z) for x in S.objects]
    offsets, n = _unknowns(data, pairs)
    blocks = []
    for w, x in S.pairs():
        dwx, dxz, dwz = S.d(w, x), S.d(x, z), S.d(w, z)
        M = data.comp[w, x, z].reshape(dwz, dwx, dxz)
        for i in range(dwx):
            block = zeros(dwz, n)
            block[:, offsets[x, z]:offsets[x, z] + dxz] += M[:, i, :]
            block[:, offsets[w, z]:offsets[w, z] + dwz] -= data.local_counit[w, x][i] * identity(dwz)
            blocks.append(clean(block))
    return _space(data, z, "left", pairs, blocks, n)


def right_integral_space(data, x):
    """Families (t_xy)_y with t_xy b = e_yz(b) t_xz for every b in hom (y,z)."""
    require_axioms(data, AxiomSet.SEMI_HOPF)
    S = data.shape
    pairs = [(x, y) for y in S.objects]
    offsets, n = _unknowns(data, pairs)
    blocks = []
    for y, z in S.pairs():
        dxy, dyz, dxz = S.d(x, y), S.d(y, z), S.d(x, z)
        M = data.comp[x, y, z].reshape(dxz, dxy, dyz)
        for i in range(dyz):
            block = zeros(dxz, n)
            block[:, offsets[x, y]:offsets[x, y] + dxy] += M[:, :, i]
            block[:, offsets[x, z]:offsets[x, z] + dxz] -= data.local_counit[y, z][i] * identity(dxz)
            blocks.append(clean(block))
    return _space(data, x, "right", pairs, blocks, n)


def integral_spaces(data, side):
    solver = left_integral_space if side == "left" else right_integral_space
    return {x: solver(data, x) for x in data.objects}


def global_integral_basis(data, side):
    """Basis of all integral families of one side, solved over every component at once."""
    require_axioms(data, AxiomSet.SEMI_HOPF)
    S = data.shape
    pairs = S.pairs()
    offsets, n = _unknowns(data, pairs)
    blocks = []
    for a, b, c in S.tuples(3):
        d_ab, d_bc, d_ac = S.d(a, b), S.d(b, c), S.d(a, c)
        M = data.comp[a, b, c].reshape(d_ac, d_ab, d_bc)
        if side == "left":
            # act by hom (a,b) on t_bc
            for i in range(d_ab):
                block = zeros(d_ac, n)
                block[:, offsets[b, c]:offsets[b, c] + d_bc] += M[:, i, :]
                block[:, offsets[a, c]:offsets[a, c] + d_ac] -= data.local_counit[a, b][i] * identity(d_ac)
                blocks.append(clean(block))
        else:
            for i in range(d_bc):
                block = zeros(d_ac, n)
                block[:, offsets[a, b]:offsets[a, b] + d_ab] += M[:, :, i]
                block[:, offsets[a, c]:offsets[a, c] + d_ac] -= data.local_counit[b, c][i] * identity(d_ac)
                blocks.append(clean(block))
    return _space(data, None, side, pairs, blocks, n).basis


def opcategory_integral_space(data, z, side="left"):
    """Elements t of C(z,z) with d t = e_z(d) t (left) or t d = e_z(d) t (right) in the local algebra."""
    data.require("opcategory", "local_monoid")
    d = data.d(z, z)
    mu = data.local_mult[z, z].reshape(d, d, d)
    eps = data.counit[z]
    blocks = []
    for i in range(d):
        act = mu[:, i, :] if side == "left" else mu[:, :, i]
        blocks.append(clean(act - eps[i] * identity(d)))
    basis = []
    for v in kernel_basis(stack(blocks, d)) if d else []:
        fam = {p: zeros(data.d(*p)) for p in data.shape.pairs()}
        fam[z, z] = v
        basis.append(IntegralFamily(side, fam))
    return IntegralSpace(z, side, basis)


def check_integral(data, t):
    S = data.shape
    rep = AxiomReport()
    name = f"{t.side} integral"
    for z, x, y in S.tuples(3):
        if t.side == "left":
            act = clean(data.comp[z, x, y] @ np.kron(identity(S.d(z, x)), column(t[x, y])))
            rep.compare(name, (z, x, y), act, clean(np.outer(t[z, y], data.local_counit[z, x])))
        else:
            act = clean(data.comp[z, x, y] @ np.kron(column(t[z, x]), identity(S.d(x, y))))
            rep.compare(name, (z, x, y), act, clean(np.outer(t[z, y], data.local_counit[x, y])))
    return rep


# ---------------------------------------------------------------- p and q

def coproduct_matrix(data, t, x, y):
    d = data.d(x, y)
    return clean(data.local_comult[x, y] @ column(t[x, y])).reshape(d, d)


def pq_maps(data, t, x, y):
    """p(f) = f(t1) t2 and q(f) = t1 f(t2) as matrices on the dual basis of hom (x,y)."""
    T = coproduct_matrix(data, t, x, y)
    return clean(T.T), T


@dataclass(frozen=True)
class NonsingularityReport:
    left_nonsingular: bool
    right_nonsingular: bool
    p_ranks: dict
    q_ranks: dict

    def to_dict(self):
        key = lambda p: ",".join(map(str, p))
        return {
            "left_nonsingular": self.left_nonsingular,
            "right_nonsingular": self.right_nonsingular,
            "p_ranks": {key(k): v for k, v in sorted(self.p_ranks.items())},
            "q_ranks": {key(k): v for k, v in sorted(self.q_ranks.items())},
        }


def nonsingularity_report(data, t):
    """Left non-singular: every p_xx invertible.  Right: every q_xx invertible.

    Ranks for off-diagonal pairs are recorded as well but play no part in the verdicts.
    """
    pr, qr = {}, {}
    for x, y in data.shape.pairs():
        p, q = pq_maps(data, t, x, y)
        pr[x, y], qr[x, y] = rank(p), rank(q)
    left = all(pr[x, x] == data.d(x, x) for x in data.objects)
    right = all(qr[x, x] == data.d(x, x) for x in data.objects)
    return NonsingularityReport(left, right, pr, qr)


def inverse_maps(data, t, which):
    """Inverses of p_xx or q_xx for every object, raising NotInvertible when singular."""
    out = {}
    for x in data.objects:
        p, q = pq_maps(data, t, x, x)
        out[x] = invert(p if which == "p" else q)
    return out


# ---------------------------------------------------------------- Casimir conversions

def integral_from_casimir(data, e):
    """t^xy = (1 (x) e_yx)(e^xy), a left integral when e is a Casimir family."""
    vecs = {}
    for x, y in data.shape.pairs():
        E = e[x, y].reshape(data.d(x, y), data.d(y, x))
        vecs[x, y] = clean(E @ data.local_counit[y, x]) if E.size else zeros(data.d(x, y))
    return IntegralFamily("left", vecs)


CASIMIR_VARIANTS = ("left", "right", "left_op", "right_op")


def casimir_from_integral(data, t, variant="left"):
    """Casimir family built from an integral and the antipode (or its inverse for the op variants).

    left      e^xy = t1 (x) s(t2)            from a left integral
    right     e^yx = s(t1) (x) t2            from a right integral
    left_op   e^xy = t2 (x) sbar(t1)         from a left integral
    right_op  e^yx = sbar(t2) (x) t1         from a right integral
    """
    from .frobenius import CasimirFamily
    from .hopf import op_antipode

    data.require("antipode")
    S = data.shape
    s = data.antipode
    sbar = op_antipode(data).maps if variant.endswith("_op") else None
    out = {}
    for x, y in S.pairs():
        dxy = S.d(x, y)
        dt = clean(data.local_comult[x, y] @ column(t[x, y]))
        if variant == "left":
            out[x, y] = apply_at(s[x, y], dt, dxy, 1).reshape(-1)
        elif variant == "right":
            out[y, x] = apply_at(s[x, y], dt, 1, dxy).reshape(-1)
        elif variant == "left_op":
            out[x, y] = apply_at(sbar[x, y], permute(dt, [dxy, dxy], [1, 0]), dxy, 1).reshape(-1)
        elif variant == "right_op":
            out[y, x] = apply_at(sbar[x, y], permute(dt, [dxy, dxy], [1, 0]), 1, dxy).reshape(-1)
        else:
            raise ValueError(f"unknown Casimir variant {variant!r}")
    return CasimirFamily({k: clean(v) for k, v in out.items()})


def transport_integral(data, t, use_inverse=False):
    """(s t)^xy = s_yx(t^yx); left integrals become right ones and vice versa.

    With ``use_inverse`` the inverse antipode is used, which undoes a previous transport.
    """
    from .hopf import op_antipode

    data.require("antipode")
    maps = op_antipode(data).maps if use_inverse else data.antipode
    vecs = {(x, y): clean(maps[y, x] @ t[y, x]) for x, y in data.shape.pairs()}
    return IntegralFamily("right" if t.side == "left" else "left", vecs)


def space_isomorphism_checks(data):
    """Per-object dimension equalities between integral spaces and coinvariant spaces."""
    from .modules import coinvariants, opmodule_coinvariants, standard_structures
    from .vcat import dual_semi_hopf

    require_axioms(data, AxiomSet.HOPF)
    std = standard_structures(data)
    dual = dual_semi_hopf(data, check=False)
    rep = AxiomReport()
    dims = {}
    for x in data.objects:
        right = right_integral_space(data, x).dimension
        left = left_integral_space(data, x).dimension
        h1 = len(opmodule_coinvariants(std["H1"], x))
        dual_right = opcategory_integral_space(dual, x, "right").dimension
        hs1 = len(coinvariants(std["Hstar1"], x))
        dims[x] = dict(right=right, left=left, h1_coinvariants=h1, dual_right=dual_right, hstar1_coinvariants=hs1)
        rep.flag("right and left integral spaces agree", (x,), right == left)
        rep.flag("right integrals match H1 coinvariants", (x,), right == h1)
        rep.flag("dual right integrals match H*1 coinvariants", (x,), dual_right == hs1)
    rep.details["dimensions"] = {str(x): v for x, v in dims.items()}
    return rep


def assemble_family(spaces, choice=None):
    """Sum one basis element per anchor into a full family; ``choice`` maps anchor to basis position."""
    spaces = list(spaces.values()) if isinstance(spaces, dict) else list(spaces)
    total = None
    for sp in spaces:
        if not sp.basis:
            continue
        t = sp.basis[(choice or {}).get(sp.anchor, 0)]
        total = t if total is None else total + t
    return total


def standard_integral(data, side="left"):
    """The family assembled from the first basis element of every anchored space, or None."""
    return assemble_family(integral_spaces(data, side))
