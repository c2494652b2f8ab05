"""Antipodes, op-antipodes, the fusion map and the packed weak Hopf algebra."""

from dataclasses import dataclass

import numpy as np

from .linalg import clean, identity, invert, kernel_basis, kron, matrix, rank, solve, stack, zeros, NoSolution, NotInvertible
from .vcat import AxiomReport, AxiomSet, VCatData, VGraphShape, apply_at, column, permute, require_axioms, row, verify_axioms


class NoAntipode(ValueError):
    pass


class NotInvertibleAntipode(ValueError):
    pass


@dataclass(frozen=True)
class AntipodeFamily:
    """``maps[x, y]`` sends hom (x,y) to hom (y,x)."""
    maps: dict

    def __getitem__(self, key):
        return self.maps[key]

    def equals(self, other):
        return self.maps.keys() == other.maps.keys() and all(
            self.maps[k].shape == other.maps[k].shape and not np.any(self.maps[k] != other.maps[k])
            for k in self.maps)


def _family(s):
    if s is None:
        return None
    return s.maps if isinstance(s, AntipodeFamily) else s


def with_antipode(data, s):
    return data.with_layers(antipode=dict(_family(s)))


# ---------------------------------------------------------------- solving

def antipode_equations(data, x, y, sides="both"):
    """Linear system for the entries of s_xy, unknowns ordered row-major."""
    S = data.shape
    dxy, dyx, dxx, dyy = S.d(x, y), S.d(y, x), S.d(x, x), S.d(y, y)
    D = data.local_comult[x, y].reshape(dxy, dxy, dxy)
    e = data.local_counit[x, y]
    blocks, rhs = [], []
    if sides in ("both", "right"):
        # a1 s(a2) = e(a) 1_x
        M = data.comp[x, y, x].reshape(dxx, dxy, dyx)
        blocks.append(np.einsum("pqi,kpr->kirq", D, M).reshape(dxx * dxy, dyx * dxy))
        rhs.append(np.outer(data.unit[x], e).reshape(-1))
    if sides in ("both", "left"):
        # s(a1) a2 = e(a) 1_y
        M = data.comp[y, x, y].reshape(dyy, dyx, dxy)
        blocks.append(np.einsum("pqi,krq->kirp", D, M).reshape(dyy * dxy, dyx * dxy))
        rhs.append(np.outer(data.unit[y], e).reshape(-1))
    A = clean(stack([clean(b) for b in blocks], dyx * dxy))
    b = clean(np.concatenate([clean(r) for r in rhs])) if rhs else zeros(0)
    return A, b


def solve_antipode(data, sides="both", check=True):
    """Solve the antipode equations pair by pair.

    ``sides`` may be "both", "right" (a1 s(a2) = e(a)1) or "left".  One-sided
    solves return a particular solution.
    """
    if check:
        require_axioms(data, AxiomSet.SEMI_HOPF)
    maps = {}
    for x, y in data.shape.pairs():
        A, b = antipode_equations(data, x, y, sides)
        dxy, dyx = data.d(x, y), data.d(y, x)
        try:
            sol = solve(A, b)
        except NoSolution:
            raise NoAntipode(f"{sides} antipode equations for hom ({x},{y}) are inconsistent") from None
        if sides == "both" and A.shape[1] and kernel_basis(A):
            raise RuntimeError(f"antipode for ({x},{y}) is not unique; convolution inverses must be")
        maps[x, y] = sol.reshape(dyx, dxy)
    fam = AntipodeFamily(maps)
    if sides == "both":
        rep = verify_axioms(with_antipode(data, fam), AxiomSet.HOPF)
        if not rep.ok:
            raise RuntimeError(f"solved antipode fails verification: {rep.first_failure().describe()}")
    return fam


# ---------------------------------------------------------------- properties

def check_antipode_properties(data, s=None):
    s = _family(s) or data.antipode
    S = data.shape
    m, u, D, e = data.comp, data.unit, data.local_comult, data.local_counit
    rep = AxiomReport()
    for x, y, z in S.tuples(3):
        dxy, dyz = S.d(x, y), S.d(y, z)
        ident = identity(dxy * dyz)
        lhs = clean(s[x, z] @ m[x, y, z])
        t = apply_at(s[x, y], ident, 1, dyz)
        t = apply_at(s[y, z], t, S.d(y, x), 1)
        t = permute(t, [S.d(y, x), S.d(z, y)], [1, 0])
        rhs = clean(m[z, y, x] @ t)
        rep.compare("antipode reverses composition", (x, y, z), lhs, rhs)
    for x, y in S.pairs():
        dxy, dyx = S.d(x, y), S.d(y, x)
        lhs = clean(D[y, x] @ s[x, y])
        t = apply_at(s[x, y], D[x, y], 1, dxy)
        t = apply_at(s[x, y], t, dyx, 1)
        rhs = permute(t, [dyx, dyx], [1, 0])
        rep.compare("antipode reverses comultiplication", (x, y), lhs, rhs)
        rep.compare("antipode preserves counit", (x, y), clean(row(e[y, x]) @ s[x, y]), row(e[x, y]))
    for x in S.objects:
        rep.compare("antipode fixes identity", (x,), clean(s[x, x] @ column(u[x])), column(u[x]))
    return rep


def op_antipode(data, s=None):
    """Inverse family: the result maps hom (x,y) to hom (y,x) and undoes s on (y,x)."""
    s = _family(s) or data.antipode
    maps = {}
    for x, y in data.shape.pairs():
        try:
            maps[x, y] = invert(s[y, x])
        except (NotInvertible, ValueError):
            raise NotInvertibleAntipode(
                f"s on hom ({y},{x}) is not invertible; finite-dimensional Hopf data cannot do this") from None
    return AntipodeFamily(maps)


def check_op_antipode(data, sbar, s=None):
    """a2 sbar(a1) = e(a) 1_x and sbar(a2) a1 = e(a) 1_y, plus inverse relations to s if given."""
    sbar = _family(sbar)
    S = data.shape
    m, u, D, e = data.comp, data.unit, data.local_comult, data.local_counit
    rep = AxiomReport()
    for x, y in S.pairs():
        dxy = S.d(x, y)
        flipped = permute(D[x, y], [dxy, dxy], [1, 0])
        left = clean(m[x, y, x] @ apply_at(sbar[x, y], flipped, dxy, 1))
        right = clean(m[y, x, y] @ apply_at(sbar[x, y], flipped, 1, dxy))
        rep.compare("left op-antipode", (x, y), left, kron(column(u[x]), row(e[x, y])))
        rep.compare("right op-antipode", (x, y), right, kron(column(u[y]), row(e[x, y])))
        if s is not None:
            s_ = _family(s)
            rep.compare("op-antipode inverts antipode", (x, y), clean(sbar[y, x] @ s_[x, y]), identity(dxy))
    return rep


# ---------------------------------------------------------------- fusion map

@dataclass(frozen=True)
class FusionMap:
    canonical: object
    inverse: object
    formula_inverse: object
    invertible: bool
    rank: int


def fusion_map(data, x, y):
    """a (x) b -> a b1 (x) b2 on H(x,x) (x) H(x,y), with its inverse when it exists."""
    S = data.shape
    dxx, dxy = S.d(x, x), S.d(x, y)
    t = apply_at(data.local_comult[x, y], identity(dxx * dxy), dxx, 1)
    canonical = apply_at(data.comp[x, x, y], t, 1, dxy)
    rk = rank(canonical)
    inverse = None
    if canonical.shape[0] == canonical.shape[1]:
        try:
            inverse = invert(canonical)
        except NotInvertible:
            pass
    formula = None
    if data.has("antipode"):
        t = apply_at(data.local_comult[x, y], identity(dxy * dxy), dxy, 1)
        t = apply_at(data.antipode[x, y], t, dxy, dxy)
        formula = apply_at(data.comp[x, y, x], t, 1, dxy)
    return FusionMap(canonical, inverse, formula, inverse is not None, rk)


# ---------------------------------------------------------------- packing

@dataclass(frozen=True)
class PackedAlgebra:
    """Direct sum of all homs with block structure maps on the flat space.

    ``comult``/``counit`` are the packed local comonoid for ``pack`` and the
    packed cocomposition/counit for ``frobenius.pack_frobenius``.
    """
    dimension: int
    index: dict
    mult: object
    unit: object
    comult: object
    counit: object
    antipode: object = None
    labels: tuple = ()

    def block(self, x, y):
        return [v for (a, b, i), v in sorted(self.index.items(), key=lambda kv: kv[1]) if (a, b) == (x, y)]


def flat_index(shape):
    index, labels = {}, []
    k = 0
    for x, y in shape.pairs():
        for i in range(shape.d(x, y)):
            index[x, y, i] = k
            labels.append(f"{shape.label(x, y, i)}")
            k += 1
    return index, tuple(labels), k


def pack(data):
    S = data.shape
    index, labels, N = flat_index(S)
    off = {(x, y): index.get((x, y, 0)) for x, y in S.pairs()}
    mult = zeros(N, N * N)
    for x, y, z in S.tuples(3):
        m = data.comp[x, y, z]
        for i in range(S.d(x, y)):
            for j in range(S.d(y, z)):
                col = (off[x, y] + i) * N + off[y, z] + j
                for k in range(S.d(x, z)):
                    mult[off[x, z] + k, col] = m[k, i * S.d(y, z) + j]
    unit = zeros(N)
    for x in S.objects:
        for i in range(S.d(x, x)):
            unit[off[x, x] + i] = data.unit[x][i]
    comult = counit = antipode = None
    if data.has("local_comonoid"):
        comult = zeros(N * N, N)
        counit = zeros(N)
        for x, y in S.pairs():
            d = S.d(x, y)
            D = data.local_comult[x, y]
            for i in range(d):
                counit[off[x, y] + i] = data.local_counit[x, y][i]
                for p in range(d):
                    for q in range(d):
                        comult[(off[x, y] + p) * N + off[x, y] + q, off[x, y] + i] = D[p * d + q, i]
    if data.has("antipode"):
        antipode = zeros(N, N)
        for x, y in S.pairs():
            s = data.antipode[x, y]
            for i in range(S.d(x, y)):
                for j in range(S.d(y, x)):
                    antipode[off[y, x] + j, off[x, y] + i] = s[j, i]
    return PackedAlgebra(N, index, mult, unit, comult, counit, antipode, labels)


def unit_coproduct(p):
    return clean(p.comult @ column(p.unit)).reshape(-1)


def as_category(p, name="packed"):
    """View packed data as a one-object category (for ordinary axiom suites)."""
    o = "*"
    shape = VGraphShape((o,), {(o, o): p.dimension}, {(o, o): p.labels})
    kw = {}
    if p.comult is not None:
        kw.update(local_comult={(o, o): p.comult}, local_counit={(o, o): p.counit})
    if p.antipode is not None:
        kw["antipode"] = {(o, o): p.antipode}
    return VCatData(shape, comp={(o, o, o): p.mult}, unit={o: p.unit}, name=name, **kw)


def check_weak_hopf(p):
    """Weak bialgebra axioms and, when an antipode is present, the weak antipode axioms."""
    N = p.dimension
    mu, D, e = p.mult, p.comult, p.counit
    base = as_category(PackedAlgebra(N, p.index, mu, p.unit, D, e, None, p.labels))
    rep = verify_axioms(base, AxiomSet.CATEGORY)
    rep.extend(verify_axioms(base, AxiomSet.LOCAL_COMONOID))
    o = ("*",)
    M = mu.reshape(N, N, N)
    T = D.reshape(N, N, N)
    # multiplicativity of the comultiplication: (ab)1 (x) (ab)2 = a1 b1 (x) a2 b2
    A = np.einsum("pik,ija->pjak", M, T)
    U = np.einsum("pjak,qjl->pqakl", A, M)
    rhs = np.einsum("pqakl,klb->pqab", U, T).reshape(N * N, N * N)
    rep.compare("comultiplication multiplicative", o, clean(D @ mu), clean(rhs))
    # weak counit
    emu = clean(row(e) @ mu)
    E = emu.reshape(N, N)
    lhs = clean(np.einsum("kc,kab->abc", E, M).reshape(1, N ** 3))
    mid = clean(np.einsum("ai,ijb,jc->abc", E, T, E).reshape(1, N ** 3))
    right = clean(np.einsum("aj,ijb,ic->abc", E, T, E).reshape(1, N ** 3))
    rep.compare("weak counit (b1, b2)", o, lhs, mid)
    rep.compare("weak counit (b2, b1)", o, lhs, right)
    # weak unit
    one = unit_coproduct(p)
    top = apply_at(D, column(one), 1, N)
    pair = kron(column(one), column(one))
    first = apply_at(mu, pair, N, N)
    second = apply_at(mu, permute(pair, [N] * 4, [2, 0, 3, 1]), N, N)
    rep.compare("weak unit (1 1' order)", o, top, first)
    rep.compare("weak unit (1' 1 order)", o, top, second)
    if p.antipode is None:
        rep.note("no antipode present: weak antipode axioms skipped")
        return rep
    s = p.antipode
    R = emu.reshape(N, N)
    one_mat = one.reshape(N, N)
    target = clean(one_mat.T @ R)
    source = clean(one_mat @ R.T)
    id_s = apply_at(mu, apply_at(s, D, N, 1), 1, 1)
    s_id = apply_at(mu, apply_at(s, D, 1, N), 1, 1)
    rep.compare("id * s = target counit", o, id_s, target)
    rep.compare("s * id = source counit", o, s_id, source)
    t = apply_at(D, D, 1, N)
    t = apply_at(s, apply_at(s, t, 1, N * N), N * N, 1)
    t = apply_at(mu, apply_at(mu, t, 1, N), 1, 1)
    rep.compare("s * id * s = s", o, t, s)
    return rep


def unit_coproduct_is_trivial(p):
    one = unit_coproduct(p)
    return not np.any(one != kron(column(p.unit), column(p.unit)).reshape(-1))
