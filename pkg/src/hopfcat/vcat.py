"""Enriched graphs carrying composition, cocomposition, local (co)monoid and
antipode layers, stored as rational structure constants.

Conventions used everywhere in the package:

* a linear map V -> W is a matrix whose column j is the image of basis vector j;
* tensor products are ordered row-major, index(i, j) = i * dim2 + j;
* ``comp[x, y, z]`` is the composition A(x,y) (x) A(y,z) -> A(x,z);
* ``antipode[x, y]`` maps hom (x,y) to hom (y,x), for categories and
  opcategories alike.
"""

import enum
import itertools
import weakref
from dataclasses import dataclass, field, replace

import numpy as np

from .linalg import clean, first_difference, fmt, identity, invert, kron, matrix, vector, NotInvertible


class MissingLayer(ValueError):
    pass


class AxiomFailure(ValueError):
    def __init__(self, report, message="axioms fail"):
        super().__init__(f"{message}: {report.first_failure()}")
        self.report = report


# ---------------------------------------------------------------- tensor plumbing

def apply_at(f, x, pre, post):
    """Apply ``1_pre (x) f (x) 1_post`` to every column of ``x``."""
    f = np.asarray(f, dtype=object)
    if f.ndim == 1:
        f = f.reshape(1, -1) if f.size else np.zeros((1, 0), dtype=object)
    cols = x.shape[1]
    k = f.shape[1]
    x3 = np.asarray(x, dtype=object).reshape(pre, k, post * cols)
    out = np.tensordot(f, x3, axes=([1], [1]))
    out = out.transpose(1, 0, 2).reshape(pre * f.shape[0] * post, cols)
    return clean(out)


def permute(x, dims, order):
    """Reorder the tensor factors indexing the rows of ``x``."""
    cols = x.shape[1]
    t = np.asarray(x, dtype=object).reshape(*dims, cols)
    t = t.transpose(*order, len(dims))
    return t.reshape(int(np.prod(dims, dtype=int)), cols)


def swap_map(d1, d2):
    """Permutation matrix sending basis e_i (x) e_j to e_j (x) e_i."""
    return permute(identity(d1 * d2), [d1, d2], [1, 0])


def column(v):
    v = np.asarray(v, dtype=object)
    return v.reshape(-1, 1)


def row(v):
    v = np.asarray(v, dtype=object)
    return v.reshape(1, -1)


# ---------------------------------------------------------------- data

@dataclass(frozen=True)
class VGraphShape:
    objects: tuple
    dims: dict
    basis_labels: dict = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        for x in self.objects:
            for y in self.objects:
                if (x, y) not in self.dims:
                    raise ValueError(f"missing dimension for hom {x!r},{y!r}")

    def d(self, x, y):
        return self.dims[x, y]

    def pairs(self):
        return list(itertools.product(self.objects, repeat=2))

    def tuples(self, n):
        return list(itertools.product(self.objects, repeat=n))

    def label(self, x, y, i):
        if self.basis_labels and (x, y) in self.basis_labels:
            return self.basis_labels[x, y][i]
        return f"{x}{y}[{i}]"

    def position(self, index):
        where = {x: i for i, x in enumerate(self.objects)}
        return tuple(where[x] for x in index)


LAYERS = {
    "category": ("comp", "unit"),
    "opcategory": ("cocomp", "counit"),
    "local_comonoid": ("local_comult", "local_counit"),
    "local_monoid": ("local_mult", "local_unit"),
    "antipode": ("antipode",),
}


@dataclass(frozen=True)
class VCatData:
    shape: VGraphShape
    comp: dict = None
    unit: dict = None
    cocomp: dict = None
    counit: dict = None
    local_comult: dict = None
    local_counit: dict = None
    local_mult: dict = None
    local_unit: dict = None
    antipode: dict = None
    name: str = ""

    @property
    def objects(self):
        return self.shape.objects

    def d(self, x, y):
        return self.shape.dims[x, y]

    @property
    def layers(self):
        return {name for name, fields in LAYERS.items() if all(getattr(self, f) is not None for f in fields)}

    def has(self, layer):
        return layer in self.layers

    def require(self, *layers):
        missing = [layer for layer in layers if layer not in self.layers]
        if missing:
            raise MissingLayer(f"{self.name or 'data'} lacks layer(s): {', '.join(missing)}")

    def with_layers(self, **kw):
        return replace(self, **kw)

    def without(self, *layers):
        kw = {f: None for layer in layers for f in LAYERS[layer]}
        return replace(self, **kw)

    def one_object(self):
        return len(self.objects) == 1


# ---------------------------------------------------------------- reports

@dataclass(frozen=True)
class Check:
    axiom: str
    index: tuple
    passed: bool
    witness: int = None
    residual: tuple = None

    def describe(self, shape=None):
        where = ",".join(str(i) for i in self.index)
        if self.passed:
            return f"{self.axiom}[{where}] ok"
        res = "" if self.residual is None else " residual " + " ".join(fmt(v) for v in self.residual)
        return f"{self.axiom}[{where}] FAILS on basis element {self.witness}{res}"


@dataclass
class AxiomReport:
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def compare(self, axiom, index, lhs, rhs):
        lhs = np.asarray(lhs, dtype=object)
        rhs = np.asarray(rhs, dtype=object)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{axiom}{index}: shapes {lhs.shape} and {rhs.shape} disagree")
        hit = first_difference(lhs, rhs) if lhs.size else None
        if hit is None:
            self.checks.append(Check(axiom, tuple(index), True))
        else:
            self.checks.append(Check(axiom, tuple(index), False, hit[0], tuple(hit[1])))
        return hit is None

    def flag(self, axiom, index, passed, witness=None, residual=None):
        self.checks.append(Check(axiom, tuple(index), bool(passed), witness,
                                 None if residual is None else tuple(residual)))
        return bool(passed)

    def note(self, text):
        self.notes.append(text)

    def extend(self, other):
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        self.details.update(other.details)
        return self

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def first_failure(self, axiom=None):
        for c in self.checks:
            if not c.passed and (axiom is None or c.axiom == axiom):
                return c
        return None

    def axioms(self):
        return list(dict.fromkeys(c.axiom for c in self.checks))

    def passed(self, axiom):
        return all(c.passed for c in self.checks if c.axiom == axiom)

    def summary(self):
        out = {}
        for c in self.checks:
            good, bad = out.get(c.axiom, (0, 0))
            out[c.axiom] = (good + c.passed, bad + (not c.passed))
        return out

    def to_dict(self):
        failing = {}
        for c in self.failures():
            failing.setdefault(c.axiom, {
                "index": [str(i) for i in c.index],
                "witness": c.witness,
                "residual": None if c.residual is None else [fmt(v) for v in c.residual],
            })
        return {
            "ok": self.ok,
            "axioms": {name: {"passed": good, "failed": bad} for name, (good, bad) in sorted(self.summary().items())},
            "first_counterexamples": dict(sorted(failing.items())),
            "notes": list(self.notes),
            **({"details": self.details} if self.details else {}),
        }

    def __str__(self):
        lines = [f"{name}: {good} ok, {bad} failing" for name, (good, bad) in self.summary().items()]
        lines += [c.describe() for c in self.failures()[:5]]
        lines += self.notes
        return "\n".join(lines)


# ---------------------------------------------------------------- axioms

class AxiomSet(enum.Enum):
    CATEGORY = "category"
    OPCATEGORY = "opcategory"
    LOCAL_COMONOID = "local-comonoid"
    LOCAL_MONOID = "local-monoid"
    SEMI_HOPF = "semi-hopf"
    SEMI_HOPF_OP = "semi-hopf-op"
    HOPF = "hopf"
    HOPF_OP = "hopf-op"
    FROBENIUS = "frobenius"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        key = str(name).strip().lower().replace("_", "-")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown axiom set {name!r}")


def _bracketings(outer_left, inner_left, outer_right, inner_right, da, db, dc):
    """Both bracketings of a triple product as matrices on a (x) b (x) c.

    ``outer_left (inner_left (x) 1)`` against ``outer_right (1 (x) inner_right)``.
    """
    n = outer_left.shape[0]
    ol = np.asarray(outer_left, dtype=object).reshape(n, inner_left.shape[0], dc)
    il = np.asarray(inner_left, dtype=object).reshape(inner_left.shape[0], da, db)
    orr = np.asarray(outer_right, dtype=object).reshape(n, da, inner_right.shape[0])
    ir = np.asarray(inner_right, dtype=object).reshape(inner_right.shape[0], db, dc)
    lhs = np.einsum("pkc,kab->pabc", ol, il).reshape(n, da * db * dc)
    rhs = np.einsum("pak,kbc->pabc", orr, ir).reshape(n, da * db * dc)
    return clean(lhs), clean(rhs)


def _category(data, rep):
    data.require("category")
    S, m, u = data.shape, data.comp, data.unit
    for x, y, z, w in S.tuples(4):
        lhs, rhs = _bracketings(m[x, z, w], m[x, y, z], m[x, y, w], m[y, z, w], S.d(x, y), S.d(y, z), S.d(z, w))
        rep.compare("associativity", (x, y, z, w), lhs, rhs)
    for x, y in S.pairs():
        dxy = S.d(x, y)
        rep.compare("left unit", (x, y), clean(m[x, x, y] @ kron(column(u[x]), identity(dxy))), identity(dxy))
        rep.compare("right unit", (x, y), clean(m[x, y, y] @ kron(identity(dxy), column(u[y]))), identity(dxy))


def _opcategory(data, rep):
    data.require("opcategory")
    S, dl, e = data.shape, data.cocomp, data.counit
    for x, y, z, w in S.tuples(4):
        lhs = apply_at(dl[y, z, w], dl[x, y, w], S.d(x, y), 1)
        rhs = apply_at(dl[x, y, z], dl[x, z, w], 1, S.d(z, w))
        rep.compare("coassociativity", (x, y, z, w), lhs, rhs)
    for x, y in S.pairs():
        dxy = S.d(x, y)
        rep.compare("left counit", (x, y), apply_at(e[x], dl[x, x, y], 1, dxy), identity(dxy))
        rep.compare("right counit", (x, y), apply_at(e[y], dl[x, y, y], dxy, 1), identity(dxy))


def _local_comonoid(data, rep):
    data.require("local_comonoid")
    for x, y in data.shape.pairs():
        d = data.d(x, y)
        D, e = data.local_comult[x, y], data.local_counit[x, y]
        rep.compare("local coassociativity", (x, y), apply_at(D, D, 1, d), apply_at(D, D, d, 1))
        rep.compare("local left counit", (x, y), apply_at(e, D, 1, d), identity(d))
        rep.compare("local right counit", (x, y), apply_at(e, D, d, 1), identity(d))


def _local_monoid(data, rep):
    data.require("local_monoid")
    for x, y in data.shape.pairs():
        d = data.d(x, y)
        mu, eta = data.local_mult[x, y], data.local_unit[x, y]
        lhs, rhs = _bracketings(mu, mu, mu, mu, d, d, d)
        rep.compare("local associativity", (x, y), lhs, rhs)
        rep.compare("local left unit", (x, y), clean(mu @ kron(column(eta), identity(d))), identity(d))
        rep.compare("local right unit", (x, y), clean(mu @ kron(identity(d), column(eta))), identity(d))


def _semi_hopf(data, rep):
    _category(data, rep)
    _local_comonoid(data, rep)
    S, m, u = data.shape, data.comp, data.unit
    D, e = data.local_comult, data.local_counit
    for x, y, z in S.tuples(3):
        dxy, dyz, dxz = S.d(x, y), S.d(y, z), S.d(x, z)
        lhs = clean(D[x, z] @ m[x, y, z])
        t = identity(dxy * dyz)
        t = apply_at(D[x, y], t, 1, dyz)
        t = apply_at(D[y, z], t, dxy * dxy, 1)
        t = permute(t, [dxy, dxy, dyz, dyz], [0, 2, 1, 3])
        t = apply_at(m[x, y, z], t, 1, dxy * dyz)
        t = apply_at(m[x, y, z], t, dxz, 1)
        rep.compare("comultiplication preserves composition", (x, y, z), lhs, t)
        rep.compare("counit preserves composition", (x, y, z),
                    clean(row(e[x, z]) @ m[x, y, z]), kron(row(e[x, y]), row(e[y, z])))
    for x in S.objects:
        ux = column(u[x])
        rep.compare("comultiplication preserves identity", (x,), clean(D[x, x] @ ux), kron(ux, ux))
        rep.compare("counit preserves identity", (x,), clean(row(e[x, x]) @ ux), matrix([[1]]))


def _hopf(data, rep):
    _semi_hopf(data, rep)
    data.require("antipode")
    S, m, u, s = data.shape, data.comp, data.unit, data.antipode
    D, e = data.local_comult, data.local_counit
    for x, y in S.pairs():
        dxy = S.d(x, y)
        right = clean(m[x, y, x] @ apply_at(s[x, y], D[x, y], dxy, 1))
        left = clean(m[y, x, y] @ apply_at(s[x, y], D[x, y], 1, dxy))
        rep.compare("right antipode", (x, y), right, kron(column(u[x]), row(e[x, y])))
        rep.compare("left antipode", (x, y), left, kron(column(u[y]), row(e[x, y])))


def _semi_hopf_op(data, rep):
    _opcategory(data, rep)
    _local_monoid(data, rep)
    S, dl, e = data.shape, data.cocomp, data.counit
    mu, eta = data.local_mult, data.local_unit
    for x, y, z in S.tuples(3):
        dxy, dyz, dxz = S.d(x, y), S.d(y, z), S.d(x, z)
        lhs = clean(dl[x, y, z] @ mu[x, z])
        t = identity(dxz * dxz)
        t = apply_at(dl[x, y, z], t, 1, dxz)
        t = apply_at(dl[x, y, z], t, dxy * dyz, 1)
        t = permute(t, [dxy, dyz, dxy, dyz], [0, 2, 1, 3])
        t = apply_at(mu[x, y], t, 1, dyz * dyz)
        t = apply_at(mu[y, z], t, dxy, 1)
        rep.compare("cocomposition preserves multiplication", (x, y, z), lhs, t)
        rep.compare("cocomposition preserves unit", (x, y, z),
                    clean(dl[x, y, z] @ column(eta[x, z])), kron(column(eta[x, y]), column(eta[y, z])))
    for x in S.objects:
        rep.compare("counit preserves multiplication", (x,),
                    clean(row(e[x]) @ mu[x, x]), kron(row(e[x]), row(e[x])))
        rep.compare("counit preserves unit", (x,), clean(row(e[x]) @ column(eta[x, x])), matrix([[1]]))


def _hopf_op(data, rep):
    _semi_hopf_op(data, rep)
    data.require("antipode")
    S, dl, e, s = data.shape, data.cocomp, data.counit, data.antipode
    mu, eta = data.local_mult, data.local_unit
    for x, y in S.pairs():
        dxy, dyx = S.d(x, y), S.d(y, x)
        right = clean(mu[x, y] @ apply_at(s[y, x], dl[x, y, x], dxy, 1))
        left = clean(mu[y, x] @ apply_at(s[x, y], dl[x, y, x], 1, dyx))
        rep.compare("opcategory right antipode", (x, y), right, kron(column(eta[x, y]), row(e[x])))
        rep.compare("opcategory left antipode", (x, y), left, kron(column(eta[y, x]), row(e[x])))


def _frobenius(data, rep):
    _category(data, rep)
    _opcategory(data, rep)
    S, m, dl = data.shape, data.comp, data.cocomp
    for x, y, z, w in S.tuples(4):
        dxy, dyz, dxw = S.d(x, y), S.d(y, z), S.d(x, w)
        ident = identity(dxy * dyz)
        left = apply_at(m[w, y, z], apply_at(dl[x, w, y], ident, 1, dyz), dxw, 1)
        mid = clean(dl[x, w, z] @ m[x, y, z])
        right = apply_at(m[x, y, w], apply_at(dl[y, w, z], ident, dxy, 1), 1, S.d(w, z))
        rep.compare("frobenius left", (x, y, z, w), left, mid)
        rep.compare("frobenius right", (x, y, z, w), right, mid)


_CHECKERS = {
    AxiomSet.CATEGORY: _category,
    AxiomSet.OPCATEGORY: _opcategory,
    AxiomSet.LOCAL_COMONOID: _local_comonoid,
    AxiomSet.LOCAL_MONOID: _local_monoid,
    AxiomSet.SEMI_HOPF: _semi_hopf,
    AxiomSet.SEMI_HOPF_OP: _semi_hopf_op,
    AxiomSet.HOPF: _hopf,
    AxiomSet.HOPF_OP: _hopf_op,
    AxiomSet.FROBENIUS: _frobenius,
}


def verify_axioms(data, axiom_set):
    """Evaluate every diagram of ``axiom_set`` as an exact matrix identity."""
    rep = AxiomReport()
    _CHECKERS[AxiomSet.parse(axiom_set)](data, rep)
    order = {name: i for i, name in enumerate(rep.axioms())}
    rep.checks.sort(key=lambda c: (order[c.axiom], data.shape.position(c.index)))
    return rep


_PASSED = {}


def _remember(data, axiom_set, rep):
    key = id(data)
    if key not in _PASSED:
        _PASSED[key] = {}
        weakref.finalize(data, _PASSED.pop, key, None)
    _PASSED[key][axiom_set] = rep


def require_axioms(data, axiom_set, what="input"):
    """Raise AxiomFailure unless ``data`` passes; successes are remembered per object."""
    axiom_set = AxiomSet.parse(axiom_set)
    seen = _PASSED.get(id(data))
    if seen is not None and axiom_set in seen:
        return seen[axiom_set]
    rep = verify_axioms(data, axiom_set)
    if rep.ok:
        _remember(data, axiom_set, rep)
    else:
        raise AxiomFailure(rep, f"{what} fails {AxiomSet.parse(axiom_set).value}")
    return rep


# ---------------------------------------------------------------- duals and opposites

def _dual_labels(shape):
    if not shape.basis_labels:
        return None
    return {(x, y): tuple(f"{lab}*" for lab in shape.basis_labels[y, x]) for x, y in shape.pairs()}


def dual_shape(shape):
    return VGraphShape(shape.objects, {(x, y): shape.d(y, x) for x, y in shape.pairs()}, _dual_labels(shape))


def _comp_to_cocomp(data):
    S = data.shape
    out = {}
    for x, y, z in S.tuples(3):
        dzx, dzy, dyx = S.d(z, x), S.d(z, y), S.d(y, x)
        t = data.comp[z, y, x].reshape(dzx, dzy, dyx)
        out[x, y, z] = t.transpose(2, 1, 0).reshape(dyx * dzy, dzx)
    return out


def _cocomp_to_comp(data):
    S = data.shape
    out = {}
    for x, y, z in S.tuples(3):
        dzy, dyx, dzx = S.d(z, y), S.d(y, x), S.d(z, x)
        t = data.cocomp[z, y, x].reshape(dzy, dyx, dzx)
        out[x, y, z] = t.transpose(2, 1, 0).reshape(dzx, dyx * dzy)
    return out


def dual(data, name=None):
    """Transpose every present layer: categories become opcategories and back,
    local comonoids become local monoids and back.  Hom (x,y) of the result
    is the dual of hom (y,x)."""
    S = data.shape
    kw = {}
    if data.has("category"):
        kw["cocomp"] = _comp_to_cocomp(data)
        kw["counit"] = {x: data.unit[x] for x in S.objects}
    if data.has("opcategory"):
        kw["comp"] = _cocomp_to_comp(data)
        kw["unit"] = {x: data.counit[x] for x in S.objects}
    if data.has("local_comonoid"):
        mult = {}
        for x, y in S.pairs():
            d = S.d(y, x)
            t = data.local_comult[y, x].reshape(d, d, d)
            mult[x, y] = t.transpose(2, 1, 0).reshape(d, d * d)
        kw["local_mult"] = mult
        kw["local_unit"] = {(x, y): data.local_counit[y, x] for x, y in S.pairs()}
    if data.has("local_monoid"):
        comult = {}
        for x, y in S.pairs():
            d = S.d(y, x)
            t = data.local_mult[y, x].reshape(d, d, d)
            comult[x, y] = t.transpose(2, 1, 0).reshape(d * d, d)
        kw["local_comult"] = comult
        kw["local_counit"] = {(x, y): data.local_unit[y, x] for x, y in S.pairs()}
    if data.has("antipode"):
        kw["antipode"] = {k: v.T.copy() for k, v in data.antipode.items()}
    return VCatData(dual_shape(S), name=name if name is not None else f"{data.name}*", **kw)


def dual_opcategory(data, check=True):
    """The opcategory of duals: hom (x,y) is the dual of A(y,x)."""
    if check:
        require_axioms(data, AxiomSet.CATEGORY)
    base = VCatData(data.shape, comp=data.comp, unit=data.unit, name=data.name)
    return dual(base)


def dual_semi_hopf(data, check=True):
    """Dual semi-Hopf opcategory, carrying the transposed antipode when present."""
    if check:
        require_axioms(data, AxiomSet.SEMI_HOPF)
    base = VCatData(data.shape, comp=data.comp, unit=data.unit, local_comult=data.local_comult,
                    local_counit=data.local_counit, antipode=data.antipode, name=data.name)
    return dual(base)


def _inverse_family(s, pairs):
    out = {}
    for x, y in pairs:
        # hom (x,y) -> (y,x) is undone by a map (y,x) -> (x,y)
        out[x, y] = invert(s[y, x])
    return out


def _op(data):
    S = data.shape
    kw = {}
    if data.has("category"):
        comp = {}
        for x, y, z in S.tuples(3):
            t = data.comp[z, y, x].reshape(S.d(z, x), S.d(z, y), S.d(y, x))
            comp[x, y, z] = t.transpose(0, 2, 1).reshape(S.d(z, x), S.d(y, x) * S.d(z, y))
        kw["comp"] = comp
        kw["unit"] = dict(data.unit)
    if data.has("opcategory"):
        kw["cocomp"] = {(x, y, z): permute(data.cocomp[z, y, x], [S.d(z, y), S.d(y, x)], [1, 0])
                        for x, y, z in S.tuples(3)}
        kw["counit"] = dict(data.counit)
    if data.has("local_comonoid"):
        kw["local_comult"] = {(x, y): data.local_comult[y, x] for x, y in S.pairs()}
        kw["local_counit"] = {(x, y): data.local_counit[y, x] for x, y in S.pairs()}
    if data.has("local_monoid"):
        kw["local_mult"] = {(x, y): data.local_mult[y, x] for x, y in S.pairs()}
        kw["local_unit"] = {(x, y): data.local_unit[y, x] for x, y in S.pairs()}
    if data.has("antipode"):
        try:
            kw["antipode"] = {(x, y): invert(data.antipode[x, y]) for x, y in S.pairs()}
        except (NotInvertible, ValueError):
            pass
    labels = None
    if S.basis_labels:
        labels = {(x, y): S.basis_labels[y, x] for x, y in S.pairs()}
    shape = VGraphShape(S.objects, {(x, y): S.d(y, x) for x, y in S.pairs()}, labels)
    return VCatData(shape, name=f"{data.name}^op", **kw)


def _cop(data):
    S = data.shape
    kw = {}
    if data.has("local_comonoid"):
        kw["local_comult"] = {(x, y): permute(data.local_comult[x, y], [S.d(x, y)] * 2, [1, 0])
                              for x, y in S.pairs()}
    if data.has("antipode"):
        try:
            kw["antipode"] = _inverse_family(data.antipode, S.pairs())
        except (NotInvertible, ValueError):
            kw["antipode"] = None
    return replace(data, name=f"{data.name}^cop", **kw)


def opposite_variants(data, variant):
    """A^op, A^cop, A^op,cop or A^cop,op.  Antipodes are replaced by their
    inverses where the variant requires it and dropped if not invertible."""
    steps = {"op": [_op], "cop": [_cop], "op_cop": [_op, _cop], "cop_op": [_cop, _op]}
    key = variant.replace("-", "_")
    if key not in steps:
        raise ValueError(f"unknown variant {variant!r}")
    out = data
    for step in steps[key]:
        out = step(out)
    return out


def trivial(name="k"):
    """The one-object, one-dimensional Hopf category k."""
    o = "*"
    shape = VGraphShape((o,), {(o, o): 1}, {(o, o): ("1",)})
    one = matrix([[1]])
    return VCatData(shape, comp={(o, o, o): one}, unit={o: vector([1])},
                    local_comult={(o, o): one}, local_counit={(o, o): vector([1])},
                    antipode={(o, o): one}, name=name)
