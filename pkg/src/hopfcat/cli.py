"""Structure files, report files and the ``hopfcat`` command line.

A structure file is JSON::

    {"format": "hopfcat-structure", "version": 1, "name": "kC4",
     "objects": ["*"], "dims": [["*", "*", 4]], "labels": {...},
     "layers": ["category", "local_comonoid", "antipode"],
     "entries": {"comp": [[["*", "*", "*"], row, col, "p/q"], ...],
                 "unit": [[["*"], pos, "1"], ...], ...},
     "candidates": {"integrals": [...], "casimirs": [...], "traces": [...]}}

Only nonzero entries are listed.  Exit codes: 0 success, 1 a requested
property fails, 2 the input could not be read.
"""

import argparse
import json
import sys

import numpy as np

from . import frobenius as fb
from . import gallery
from . import hopf
from . import integrals as ig
from . import larson_sweedler as ls
from .linalg import fmt, q, zeros
from .vcat import LAYERS, AxiomFailure, AxiomSet, MissingLayer, VCatData, VGraphShape, dual, dual_semi_hopf, verify_axioms

FORMAT = "hopfcat-structure"
VERSION = 1

_ARITY = {"comp": 3, "cocomp": 3, "unit": 1, "counit": 1, "local_comult": 2, "local_counit": 2,
          "local_mult": 2, "local_unit": 2, "antipode": 2}


class StructureError(ValueError):
    pass


def _field_shape(shape, fieldname, index):
    d = shape.d
    if fieldname == "comp":
        x, y, z = index
        return d(x, z), d(x, y) * d(y, z)
    if fieldname == "cocomp":
        x, y, z = index
        return d(x, y) * d(y, z), d(x, z)
    if fieldname in ("unit", "counit"):
        (x,) = index
        return (d(x, x),)
    if fieldname in ("local_counit", "local_unit"):
        return (d(*index),)
    if fieldname == "local_comult":
        n = d(*index)
        return n * n, n
    if fieldname == "local_mult":
        n = d(*index)
        return n, n * n
    if fieldname == "antipode":
        x, y = index
        return d(y, x), d(x, y)
    raise StructureError(f"unknown field {fieldname}")


def _indices(shape, fieldname):
    return shape.tuples(_ARITY[fieldname]) if _ARITY[fieldname] > 1 else [(x,) for x in shape.objects]


def _key(index):
    return index[0] if len(index) == 1 else tuple(index)


def _sparse(arr, index):
    out = []
    for pos in zip(*np.nonzero(arr != 0)):
        out.append([list(index), *[int(p) for p in pos], fmt(arr[pos])])
    return out


def _vector_entries(vecs):
    out = []
    for key in sorted(vecs, key=str):
        out += _sparse(np.asarray(vecs[key], dtype=object), list(key) if isinstance(key, tuple) else [key])
    return out


def to_json(data, candidates=None):
    S = data.shape
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "name": data.name,
        "objects": list(S.objects),
        "dims": [[x, y, S.d(x, y)] for x, y in S.pairs()],
        "layers": sorted(data.layers),
        "entries": {},
    }
    if S.basis_labels:
        doc["labels"] = {f"{x}|{y}": list(S.basis_labels[x, y]) for x, y in S.pairs() if (x, y) in S.basis_labels}
    for layer in sorted(data.layers):
        for f in LAYERS[layer]:
            table = getattr(data, f)
            entries = []
            for index in _indices(S, f):
                entries += _sparse(np.asarray(table[_key(index)], dtype=object), index)
            doc["entries"][f] = entries
    if candidates:
        doc["candidates"] = candidates
    return doc


def from_json(doc):
    try:
        return _from_json(doc)
    except StructureError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as err:
        raise StructureError(f"malformed structure file: {err!r}") from None


def _from_json(doc):
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise StructureError("not a hopfcat structure file")
    if doc.get("version") != VERSION:
        raise StructureError(f"unsupported version {doc.get('version')!r}")
    objects = tuple(doc["objects"])
    if len(set(objects)) != len(objects):
        raise StructureError("duplicate objects")
    dims = {}
    for x, y, n in doc["dims"]:
        if x not in objects or y not in objects or not isinstance(n, int) or n < 0:
            raise StructureError(f"bad dimension entry {[x, y, n]}")
        dims[x, y] = n
    labels = None
    if "labels" in doc:
        labels = {tuple(k.split("|")): tuple(v) for k, v in doc["labels"].items()}
    try:
        shape = VGraphShape(objects, dims, labels)
    except ValueError as err:
        raise StructureError(str(err)) from None
    layers = doc.get("layers", [])
    unknown = [l for l in layers if l not in LAYERS]
    if unknown:
        raise StructureError(f"unknown layer(s) {unknown}")
    fields = {f for l in layers for f in LAYERS[l]}
    extra = set(doc.get("entries", {})) - fields
    if extra:
        raise StructureError(f"entries for undeclared layer fields {sorted(extra)}")
    kw = {}
    for f in sorted(fields):
        table = {}
        for index in _indices(shape, f):
            table[_key(index)] = zeros(*_field_shape(shape, f, index))
        for entry in doc["entries"].get(f, []):
            index = tuple(entry[0])
            arr = table.get(_key(index))
            if arr is None or len(index) != _ARITY[f]:
                raise StructureError(f"bad index {list(index)} for {f}")
            pos = tuple(entry[1:-1])
            if len(pos) != arr.ndim or any(not (0 <= p < n) for p, n in zip(pos, arr.shape)):
                raise StructureError(f"position {list(pos)} out of range for {f}{list(index)}")
            arr[pos] = q(entry[-1])
        kw[f] = table
    return VCatData(shape, name=doc.get("name", ""), **kw)


def read_structure(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as err:
        raise StructureError(f"cannot read {path}: {err.strerror}") from None
    except json.JSONDecodeError as err:
        raise StructureError(f"{path} is not valid JSON: {err}") from None
    return from_json(doc), doc.get("candidates", {})


def _flat(obj):
    return not isinstance(obj, (list, dict)) or (
        isinstance(obj, list) and all(not isinstance(v, (list, dict)) or
                                      (isinstance(v, list) and all(not isinstance(w, (list, dict)) for w in v))
                                      for v in obj))


def _render(obj, depth):
    pad = " " * depth
    if _flat(obj):
        return json.dumps(obj, separators=(", ", ": "))
    if isinstance(obj, list):
        inner = ",\n".join(pad + " " + _render(v, depth + 1) for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    if not obj:
        return "{}"
    inner = ",\n".join(f"{pad} {json.dumps(k)}: {_render(obj[k], depth + 1)}" for k in sorted(obj))
    return "{\n" + inner + "\n" + pad + "}"


def dumps(doc):
    """Stable JSON: sorted keys, one sparse entry per line."""
    return _render(doc, 0) + "\n"


def _emit(doc, output):
    text = dumps(doc)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- candidate families

def family_to_json(vectors):
    return _vector_entries(vectors)


def family_from_json(entries, data, kind):
    S = data.shape
    if kind == "trace":
        vecs = {x: zeros(S.d(x, x)) for x in S.objects}
    elif kind == "casimir":
        vecs = {(x, y): zeros(S.d(x, y) * S.d(y, x)) for x, y in S.pairs()}
    else:
        vecs = {(x, y): zeros(S.d(x, y)) for x, y in S.pairs()}
    for index, pos, value in entries:
        key = index[0] if kind == "trace" else tuple(index)
        vecs[key][pos] = q(value)
    return vecs


def integral_candidates(cands, data):
    return [ig.IntegralFamily(c["side"], family_from_json(c["vectors"], data, "integral"))
            for c in cands.get("integrals", [])]


# ---------------------------------------------------------------- commands

def _report_doc(command, data, body):
    return {"format": "hopfcat-report", "version": VERSION, "command": command, "name": data.name, **body}


def cmd_check(args):
    data, _ = read_structure(args.input)
    sets = [s.strip() for s in args.axioms.split(",") if s.strip()]
    results, ok = {}, True
    for name in sets:
        try:
            if name == "weak-hopf":
                rep = hopf.check_weak_hopf(hopf.pack(data))
            else:
                axiom_set = AxiomSet.parse(name)
                target = data
                if axiom_set is AxiomSet.HOPF and not data.has("antipode"):
                    target = hopf.with_antipode(data, hopf.solve_antipode(data))
                rep = verify_axioms(target, axiom_set)
            results[name] = rep.to_dict()
            ok &= rep.ok
        except hopf.NoAntipode as err:
            results[name] = {"ok": False, "error": "NoAntipode", "message": str(err)}
            ok = False
        except MissingLayer as err:
            results[name] = {"ok": False, "error": "MissingLayer", "message": str(err)}
            ok = False
        except ValueError as err:
            if name != "weak-hopf" and not _known_axiom(name):
                raise StructureError(f"unknown axiom set {name!r}") from None
            results[name] = {"ok": False, "error": type(err).__name__, "message": str(err)}
            ok = False
    _emit(_report_doc("check", data, {"ok": ok, "results": results}), args.output)
    return 0 if ok else 1


def _known_axiom(name):
    try:
        AxiomSet.parse(name)
        return True
    except ValueError:
        return False


def cmd_integrals(args):
    data, _ = read_structure(args.input)
    anchors = [args.anchor] if args.anchor else list(data.objects)
    if args.anchor and args.anchor not in data.objects:
        raise StructureError(f"unknown object {args.anchor!r}")
    spaces = {}
    solver = ig.left_integral_space if args.side == "left" else ig.right_integral_space
    for x in anchors:
        sp = solver(data, x)
        spaces[str(x)] = {
            "dimension": sp.dimension,
            "basis": [{",".join(map(str, k)): [fmt(v) for v in vec] for k, vec in b.vectors.items() if vec.size}
                      for b in sp.basis],
        }
    body = {"side": args.side, "spaces": spaces}
    family = ig.assemble_family([solver(data, x) for x in data.objects])
    if family is not None:
        body["nonsingularity"] = ig.nonsingularity_report(data, family).to_dict()
    _emit(_report_doc("integrals", data, body), args.output)
    return 0


def cmd_synthesize(args):
    data, cands = read_structure(args.input)
    extra = {}
    if args.target == "antipode":
        base = data.without("antipode") if data.has("antipode") else data
        try:
            out = hopf.with_antipode(base, hopf.solve_antipode(base))
        except hopf.NoAntipode as err:
            sys.stderr.write(f"NoAntipode: {err}\n")
            return 1
    elif args.target == "frobenius":
        target = data
        if not data.has("antipode"):
            try:
                target = hopf.with_antipode(data, hopf.solve_antipode(data))
            except hopf.NoAntipode:
                target = None
        if target is not None:
            t = ig.standard_integral(target, "left")
            try:
                system = ls.frobenius_from_hopf_integral(target, t).system
            except ls.SingularIntegral:
                system = None
        else:
            system = fb.find_frobenius_system(data)
        if system is None:
            sys.stderr.write("no Frobenius structure found\n")
            return 1
        out = fb.frobenius_structure(data, system)
        extra = {"casimirs": [family_to_json(system.casimir.tensors)],
                 "traces": [family_to_json(system.trace.functionals)]}
    elif args.target == "dual":
        try:
            out = dual_semi_hopf(data)
        except (MissingLayer, ValueError):
            out = dual(data)
    elif args.target == "pack":
        p = hopf.pack(data)
        out = hopf.as_category(p, f"packed {data.name}")
    else:
        raise StructureError(f"unknown target {args.target!r}")
    _emit(to_json(out, extra or None), args.output)
    return 0


def cmd_ls_report(args):
    data, cands = read_structure(args.input)
    rep = ls.ls_report(data, integral_candidates(cands, data))
    _emit(_report_doc("ls-report", data, rep.to_dict()), args.output)
    return 0 if rep.consistent else 1


def cmd_gallery(args):
    kind = args.kind
    try:
        if kind == "group":
            data = gallery.group_algebra(args.table)
        elif kind == "functions":
            data = gallery.function_algebra(args.table)
        elif kind == "monoid":
            data = gallery.monoid_bialgebra(args.table)
        elif kind == "groupoid":
            data = gallery.groupoid_category(gallery.pair_groupoid(args.pair), f"pair groupoid on {args.pair} objects")
        elif kind == "fixture":
            data = gallery.fixture(args.name)
        else:
            raise StructureError(f"unknown gallery kind {kind!r}")
    except (KeyError, gallery.InvalidTable) as err:
        raise StructureError(f"gallery: {err}") from None
    _emit(to_json(data), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="hopfcat", description="Exact checks for Hopf and Frobenius linear categories.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify axiom sets")
    p.add_argument("input")
    p.add_argument("--axioms", default="category",
                   help="comma separated: " + ", ".join(a.value for a in AxiomSet) + ", weak-hopf")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("integrals", help="integral spaces and non-singularity")
    p.add_argument("input")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--anchor")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_integrals)

    p = sub.add_parser("synthesize", help="add derived layers")
    p.add_argument("input")
    p.add_argument("--target", choices=("antipode", "frobenius", "dual", "pack"), required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_synthesize)

    p = sub.add_parser("ls-report", help="Larson-Sweedler battery")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_ls_report)

    p = sub.add_parser("gallery", help="emit a built-in example")
    p.add_argument("kind", choices=("group", "functions", "monoid", "groupoid", "fixture"))
    p.add_argument("--table", default="c4")
    p.add_argument("--pair", type=int, default=2)
    p.add_argument("--name", default="c4")
    p.add_argument("-o", "--output")
    p.set_defaults(run=cmd_gallery)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.run(args)
    except StructureError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except MissingLayer as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except AxiomFailure as err:
        sys.stderr.write(f"precondition fails: {err}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
