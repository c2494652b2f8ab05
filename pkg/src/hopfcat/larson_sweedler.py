"""Antipodes and Frobenius structures synthesised from non-singular integrals, and the
battery of conditions that must all agree on a finite semi-Hopf category."""

from dataclasses import dataclass, field

import numpy as np

from . import frobenius as fb
from . import integrals as ig
from .hopf import AntipodeFamily, NoAntipode, solve_antipode, with_antipode
from .linalg import clean, invert, rank, NotInvertible
from .vcat import AxiomReport, AxiomSet, dual_semi_hopf, require_axioms, verify_axioms


class SingularIntegral(ValueError):
    pass


class NotHopf(ValueError):
    pass


class TheoremViolation(RuntimeError):
    pass


def _inverse_image_of_units(data, t, which):
    """f_x = q_xx^-1(u_x) (which="q") or g_x = p_xx^-1(u_x) (which="p")."""
    out = {}
    for x in data.objects:
        p, q = ig.pq_maps(data, t, x, x)
        try:
            out[x] = clean(invert(q if which == "q" else p) @ data.unit[x])
        except NotInvertible:
            raise SingularIntegral(f"{which}_{x}{x} is not invertible") from None
    return out


def _m3(data, x, y, z):
    return data.comp[x, y, z].reshape(data.d(x, z), data.d(x, y), data.d(y, z))


def _certify(data, maps, axiom):
    rep = verify_axioms(with_antipode(data, maps), AxiomSet.HOPF)
    if not rep.passed(axiom):
        raise TheoremViolation(f"synthesised map fails the {axiom}: {rep.first_failure(axiom).describe()}")
    return rep


def synthesize_right_antipode(data, t, certify=True):
    """s_xy(a) = t^yx_1 f_x(a t^yx_2) from a left integral whose q-maps are invertible."""
    f = _inverse_image_of_units(data, t, "q")
    maps = {}
    for x, y in data.shape.pairs():
        T = ig.coproduct_matrix(data, t, y, x)
        F = np.einsum("k,kiq->iq", f[x], _m3(data, x, y, x))
        maps[x, y] = clean(T @ F.T)
    if certify:
        _certify(data, maps, "right antipode")
    return AntipodeFamily(maps)


def synthesize_left_antipode(data, t, certify=True):
    """s_xy(a) = g_y(t^yx_1 a) t^yx_2 from a right integral whose p-maps are invertible."""
    g = _inverse_image_of_units(data, t, "p")
    maps = {}
    for x, y in data.shape.pairs():
        T = ig.coproduct_matrix(data, t, y, x)
        G = np.einsum("k,kpi->pi", g[y], _m3(data, y, x, y))
        maps[x, y] = clean(T.T @ G)
    if certify:
        _certify(data, maps, "left antipode")
    return AntipodeFamily(maps)


def synthesize_antipode(data, left, right):
    """Right antipode from ``left`` and left antipode from ``right``; they coincide and form an antipode."""
    s_right = synthesize_right_antipode(data, left)
    s_left = synthesize_left_antipode(data, right)
    if not s_right.equals(s_left):
        raise TheoremViolation("left and right synthesised antipodes differ")
    rep = verify_axioms(with_antipode(data, s_right), AxiomSet.HOPF)
    if not rep.ok:
        raise TheoremViolation(f"synthesised antipode fails: {rep.first_failure().describe()}")
    return s_right


def synthesize_op_antipode(data, left=None, right=None):
    """Op-antipode from a left integral with invertible p-maps, or a right integral with invertible q-maps.

    With both, the two results must agree; with an antipode present, it must be the inverse of s.
    """
    results = []
    if left is not None:
        g = _inverse_image_of_units(data, left, "p")
        maps = {}
        for x, y in data.shape.pairs():
            T = ig.coproduct_matrix(data, left, y, x)
            G = np.einsum("k,kip->ip", g[x], _m3(data, x, y, x))
            maps[x, y] = clean(T.T @ G.T)
        results.append(AntipodeFamily(maps))
    if right is not None:
        f = _inverse_image_of_units(data, right, "q")
        maps = {}
        for x, y in data.shape.pairs():
            T = ig.coproduct_matrix(data, right, y, x)
            F = np.einsum("k,kqi->qi", f[y], _m3(data, y, x, y))
            maps[x, y] = clean(T @ F)
        results.append(AntipodeFamily(maps))
    if not results:
        raise ValueError("need at least one integral")
    sbar = results[0]
    if len(results) == 2 and not results[1].equals(sbar):
        raise TheoremViolation("op-antipodes from left and right integrals differ")
    from .hopf import check_op_antipode
    s = data.antipode if data.has("antipode") else None
    rep = check_op_antipode(data, sbar, s)
    if not rep.ok:
        raise TheoremViolation(f"synthesised op-antipode fails: {rep.first_failure().describe()}")
    return sbar


# ---------------------------------------------------------------- Frobenius from an integral

@dataclass
class HopfFrobenius:
    system: object
    report: AxiomReport
    psi: dict
    phi: dict


def frobenius_from_hopf_integral(data, t):
    """Casimir t1 (x) s(t2) and trace f_x composed with the inverse antipode on hom (x,x)."""
    if not data.has("antipode") or not verify_axioms(data, AxiomSet.HOPF).ok:
        raise NotHopf("Frobenius synthesis needs Hopf data with its antipode")
    if t.side != "left":
        raise ValueError("expects a left integral family")
    f = _inverse_image_of_units(data, t, "q")
    trace = {}
    for x in data.objects:
        trace[x] = clean(f[x] @ invert(data.antipode[x, x])) if data.d(x, x) else f[x]
    system = fb.FrobeniusSystem(ig.casimir_from_integral(data, t, "left"), fb.TraceFamily(trace))
    rep = fb.frobenius_report(data, system)
    rep.extend(fb.frobenius_iso_check(data, system))
    psi, phi = fb.psi_phi(data, system)
    return HopfFrobenius(system, rep, psi, phi)


def nonsingularity_from_frobenius(data, t):
    """All p_xy, q_xy invertible, with phi_yx = s_xy p_xy and phi'_xy = q_xy s*_xy for e = e_t."""
    if not data.has("antipode") or not verify_axioms(data, AxiomSet.HOPF).ok:
        raise NotHopf("needs Hopf data")
    e = ig.casimir_from_integral(data, t, "left")
    rep = AxiomReport()
    s = data.antipode
    for x, y in data.shape.pairs():
        p, q = ig.pq_maps(data, t, x, y)
        d = data.d(x, y)
        rep.flag("p invertible", (x, y), rank(p) == d)
        rep.flag("q invertible", (x, y), rank(q) == d)
        E = e[x, y].reshape(d, data.d(y, x))
        rep.compare("phi factorises through p", (x, y), fb.phi_map(data, e, y, x), clean(s[x, y] @ p))
        rep.compare("phi' factorises through q", (x, y), E, clean(q @ s[x, y].T))
    return rep


# ---------------------------------------------------------------- batteries

def general_ls_check(data):
    """Frobenius, one-dimensional integrals, local Frobenius and dual integrals for Hopf data."""
    require_axioms(data, AxiomSet.HOPF)
    rep = AxiomReport()
    left = ig.standard_integral(data, "left")
    right = ig.standard_integral(data, "right")
    try:
        hf = frobenius_from_hopf_integral(data, left)
        rep.flag("Frobenius", (), hf.report.ok)
        rep.extend(fb.opcat_iso_check(data, hf.system))
    except SingularIntegral:
        rep.flag("Frobenius", (), False)
    for x in data.objects:
        rep.flag("left integrals one-dimensional", (x,), ig.left_integral_space(data, x).dimension == 1)
    rep.flag("locally Frobenius", (), fb.local_frobenius_check(data, right).ok)
    dual = dual_semi_hopf(data, check=False)
    for x in data.objects:
        for side in ("left", "right"):
            rep.flag(f"dual {side} integrals one-dimensional", (x,),
                     ig.opcategory_integral_space(dual, x, side).dimension == 1)
    return rep


CONDITIONS = (
    ("i", "Hopf with a non-singular right integral"),
    ("ii", "non-singular left and right integrals"),
    ("iii", "Hopf and Frobenius"),
    ("iv", "Hopf with one-dimensional left integral spaces"),
    ("v", "dual opcategory is Hopf with one-dimensional integral spaces"),
    ("vi", "Hopf with a non-singular left integral and one-dimensional right integral spaces"),
    ("vii", "left integral with invertible q-maps and the dimension condition"),
    ("viii", "Hopf"),
)


@dataclass
class LSReport:
    name: str
    conditions: dict
    consistent: bool
    category_frobenius: object
    integral_dimensions: dict
    notes: list = field(default_factory=list)
    antipode: object = None
    frobenius: object = None

    def to_dict(self):
        return {
            "name": self.name,
            "conditions": {k: {"holds": v, "meaning": dict(CONDITIONS)[k]} for k, v in self.conditions.items()},
            "consistent": self.consistent,
            "category_frobenius": self.category_frobenius,
            "integral_dimensions": {str(x): v for x, v in self.integral_dimensions.items()},
            "notes": list(self.notes),
        }


def dimension_condition(data):
    """d(x,y) != 0 implies d(x,y) = d(x,x) = d(y,y)."""
    return all(d == 0 or d == data.d(x, x) == data.d(y, y)
               for (x, y) in data.shape.pairs() for d in [data.d(x, y)])


def _candidates(data, side, extra):
    spaces = ig.integral_spaces(data, side)
    fams = []
    t = ig.assemble_family(spaces)
    if t is not None:
        fams.append(t)
    fams += [f for f in extra if f.side == side]
    wide = any(sp.dimension > 1 for sp in spaces.values())
    return fams, spaces, wide


def ls_report(data, candidates=()):
    require_axioms(data, AxiomSet.SEMI_HOPF)
    notes = []
    base = data.without("antipode") if data.has("antipode") else data
    try:
        s = solve_antipode(base)
        hopf = True
        hdata = with_antipode(base, s)
    except NoAntipode:
        s, hopf, hdata = None, False, None

    lefts, lspaces, lwide = _candidates(data, "left", candidates)
    rights, rspaces, rwide = _candidates(data, "right", candidates)
    if lwide or rwide:
        notes.append("an integral space has dimension above one; only the assembled basis family "
                     "and supplied candidates were tested for non-singularity")
    lrep = [(t, ig.nonsingularity_report(data, t)) for t in lefts if not t.is_zero()]
    rrep = [(t, ig.nonsingularity_report(data, t)) for t in rights if not t.is_zero()]
    ns = lambda r: r.left_nonsingular and r.right_nonsingular
    ns_left = next((t for t, r in lrep if ns(r)), None)
    ns_right = next((t for t, r in rrep if ns(r)), None)
    q_left = next((t for t, r in lrep if r.right_nonsingular), None)
    left_dims = {x: sp.dimension for x, sp in lspaces.items()}
    right_dims = {x: sp.dimension for x, sp in rspaces.items()}
    all_one = lambda dims: all(v == 1 for v in dims.values())

    frob_system = None
    hopf_frobenius = False
    if hopf and ns_left is not None:
        hf = frobenius_from_hopf_integral(hdata, ns_left)
        hopf_frobenius = hf.report.ok
        frob_system = hf.system
    elif hopf:
        found = fb.find_frobenius_system(hdata)
        hopf_frobenius = found is not None and fb.frobenius_report(hdata, found).ok
        frob_system = found

    dual_ok = False
    if hopf:
        dual = dual_semi_hopf(hdata, check=False)
        dual_ok = verify_axioms(dual, AxiomSet.HOPF_OP).ok and all(
            ig.opcategory_integral_space(dual, x, side).dimension == 1
            for x in data.objects for side in ("left", "right"))

    cond = {
        "i": hopf and ns_right is not None,
        "ii": ns_left is not None and ns_right is not None,
        "iii": hopf and hopf_frobenius,
        "iv": hopf and all_one(left_dims),
        "v": dual_ok,
        "vi": hopf and ns_left is not None and all_one(right_dims),
        "vii": q_left is not None and dimension_condition(data),
        "viii": hopf,
    }
    consistent = len(set(cond.values())) == 1

    if ns_left is not None and ns_right is not None:
        try:
            synth = synthesize_antipode(data, ns_left, ns_right)
            if s is None or not synth.equals(s):
                consistent = False
                notes.append("synthesised antipode disagrees with the solved one")
            synthesize_op_antipode(hdata or with_antipode(data, synth), ns_left, ns_right)
        except (TheoremViolation, SingularIntegral) as err:
            consistent = False
            notes.append(f"synthesis failed: {err}")
    if hopf and not dimension_condition(data):
        consistent = False
        notes.append("Hopf data violates the dimension condition")
    if hopf and hopf_frobenius and not (all_one(left_dims) and all_one(right_dims)):
        consistent = False
        notes.append("Hopf and Frobenius but an integral space is not one-dimensional")

    cat_frob = fb.find_frobenius_system(data)
    if cat_frob is not None and not fb.frobenius_report(data, cat_frob).ok:
        cat_frob = None
    if cat_frob is not None and not hopf:
        notes.append("the category is Frobenius although it is not Hopf: that Frobenius structure "
                     "does not arise from a non-singular integral")
    if frob_system is None:
        frob_system = cat_frob
    dims = {x: {"left": left_dims[x], "right": right_dims[x]} for x in data.objects}
    return LSReport(data.name, cond, consistent, cat_frob is not None, dims, notes, s, frob_system)
