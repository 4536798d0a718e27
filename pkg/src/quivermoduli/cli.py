"""Command line interface.

Every verb reads a quiver file (JSON with `vertices` and `arrows`; `-` for
stdin) and prints one JSON document with the applied rule or certificate
embedded.  Output is deterministic, so identical invocations produce
identical bytes.  Exit codes: 0 on success, 1 for invalid input or failed
searches, 2 for command line errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import doubling, local, stability, toric
from .quiver import (
    QuiverError,
    ValidationError,
    classify,
    euler_form,
    load_quiver,
    quiver_to_dict,
    tits_form,
    vector_from_mapping,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str):
    return load_quiver(_read_text(path))


def _vector(q, text: str):
    """Inline comma-separated entries in vertex order, or @file.json holding
    an array or a {vertex: value} object."""
    if text.startswith("@"):
        doc = json.loads(_read_text(text[1:]))
        if isinstance(doc, dict):
            return vector_from_mapping(q, doc)
        if isinstance(doc, list):
            return tuple(int(x) for x in doc)
        raise ValidationError("vector file must hold an array or an object")
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValidationError(f"cannot parse vector {text!r}") from None


def _plain(x):
    if isinstance(x, (tuple, list)):
        return [_plain(v) for v in x]
    return x


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _verdict_dict(v: toric.SmoothVerdict) -> dict:
    return {"status": v.status, "rule": v.rule, "detail": v.detail, "data": _plain(v.data)}


def _type_dict(rt: local.RepType) -> dict:
    return {"slots": [{"beta": list(b), "count": c} for b, c in rt.slots]}


def _setting_dict(s: local.LocalSetting) -> dict:
    return {"quiver": quiver_to_dict(s.quiver), "mu": list(s.mu)}


def _monomial_dict(m: toric.FlowMonomial) -> dict:
    return {"monomial": toric.monomial_str(m), "exponents": list(m.exponents)}


def _cmd_classify(args) -> None:
    q = _load(args.quiver)
    c = classify(q)
    _emit({"kind": c.kind, "name": c.name, "radical": _plain(c.radical), "negative": _plain(c.negative)})


def _cmd_form(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    if args.beta is not None:
        b = _vector(q, args.beta)
        _emit({"alpha": list(a), "beta": list(b), "euler": euler_form(q, a, b)})
    else:
        _emit({"alpha": list(a), "tits": tits_form(q, a)})


def _cmd_double(args) -> None:
    q = _load(args.quiver)
    _emit(doubling.doubling_to_dict(doubling.double_vertex(q, args.vertex)))


def _cmd_bipartify(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    bq, ba, bt, trail = doubling.bipartify(q, a, t, args.n)
    steps = []
    for d in trail:
        steps.append({
            "vertex": d.vertex,
            "minus": d.minus,
            "plus": d.plus,
            "e": d.e_arrow,
            "n": -bt[bq.vertex_index(d.minus)],
        })
    _emit({"quiver": quiver_to_dict(bq), "alpha": list(ba), "theta": list(bt), "steps": steps})


def _cmd_stable_dims(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    _emit({
        "alpha": list(a),
        "theta": list(t),
        "semistable": _plain(stability.enumerate_semistable_dims(q, a, t)),
        "stable": _plain(stability.enumerate_stable_dims(q, a, t)),
    })


def _cmd_rep_types(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    types = local.rep_types(q, a, t, args.max_box)
    _emit({"alpha": list(a), "theta": list(t), "types": [_type_dict(rt) for rt in types]})


def _cmd_local(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    out = []
    for rt in local.rep_types(q, a, t, args.max_box):
        s = local.local_setting(q, rt)
        out.append({
            "type": _type_dict(rt),
            "setting": _setting_dict(s),
            "verdict": _verdict_dict(local.setting_smooth(s)),
        })
    _emit({"alpha": list(a), "theta": list(t), "types": out})


def _cmd_smooth(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    v = local.moduli_smooth(q, a, t, args.max_box)
    _emit({"alpha": list(a), "theta": list(t), "verdict": _verdict_dict(v)})


def _cmd_witness(args) -> None:
    q = _load(args.quiver)
    w = local.singular_witness(q, args.max_total, args.weight_bound)
    _emit({
        "gamma": list(w.gamma),
        "theta": list(w.theta),
        "alpha": list(w.alpha),
        "type": _type_dict(w.rep_type),
        "setting": _setting_dict(w.setting),
        "verdict": _verdict_dict(w.verdict),
    })


def _cmd_toric(args) -> None:
    q = _load(args.quiver)
    s = _vector(q, args.sigma)
    if not any(s):
        v = toric.toric_smooth(q, s)
        _emit({
            "mode": "affine",
            "cycles": _plain(toric.simple_cycles(q)),
            "verdict": _verdict_dict(v),
        })
        return
    pres = toric.presentation(q, s, args.degree_bound)
    v = toric.toric_smooth(q, s, args.degree_bound)
    names = [toric.monomial_str(m) for m in pres.generators]
    rels = []
    for (i, j), (k, l) in pres.relations:
        rels.append({
            "left": [i, j],
            "right": [k, l],
            "text": f"{names[i]} * {names[j]} = {names[k]} * {names[l]}",
        })
    _emit({
        "mode": "projective",
        "sigma": list(s),
        "generators": [_monomial_dict(m) for m in pres.generators],
        "relations": rels,
        "degree1_generates": pres.degree1_generates,
        "verdict": _verdict_dict(v),
    })


def _cmd_verify_doubling(args) -> None:
    q = _load(args.quiver)
    a = _vector(q, args.alpha)
    t = _vector(q, args.theta)
    rep = stability.verify_doubling(q, a, t, args.vertex, args.n)
    _emit({
        "vertex": rep["vertex"],
        "n": rep["n"],
        "ok": rep["ok"],
        "unbalanced_semistable": _plain(rep["unbalanced_semistable"]),
        "transfer_mismatches": _plain(rep["transfer_mismatches"]),
    })


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qmod",
        description="Exact computations with quivers: forms, doubling, stability, local models, toric charts.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("quiver", help="path to a quiver JSON file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    add("classify", _cmd_classify, "Dynkin / extended Dynkin / wild with certificate")

    sp = add("form", _cmd_form, "Tits form of alpha, or the bilinear form against beta")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--beta")

    sp = add("double", _cmd_double, "split one vertex into a source and a sink copy")
    sp.add_argument("--vertex", required=True)

    sp = add("bipartify", _cmd_bipartify, "double every vertex, lifting dimensions and weights")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--n", type=int, default=None,
                    help="fixed weight shift; default recomputes a sufficient one per step")

    sp = add("stable-dims", _cmd_stable_dims, "semistable and stable dimension vectors below alpha")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)

    sp = add("rep-types", _cmd_rep_types, "representation types of alpha at theta")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--max-box", type=int, default=10 ** 6)

    sp = add("local", _cmd_local, "local settings of all representation types, with verdicts")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--max-box", type=int, default=10 ** 6)

    sp = add("smooth", _cmd_smooth, "smoothness of the moduli space of alpha at theta")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--max-box", type=int, default=10 ** 6)

    sp = add("witness", _cmd_witness, "search a wild quiver for a certified singular moduli space")
    sp.add_argument("--max-total", type=int, default=10)
    sp.add_argument("--weight-bound", type=int, default=3)

    sp = add("toric", _cmd_toric, "sections, presentation and smoothness of the thin quotient")
    sp.add_argument("--sigma", required=True)
    sp.add_argument("--degree-bound", type=int, default=2)

    sp = add("verify-doubling", _cmd_verify_doubling, "check stability transfer through one doubling")
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--vertex", required=True)
    sp.add_argument("--n", type=int, default=None)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (QuiverError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
