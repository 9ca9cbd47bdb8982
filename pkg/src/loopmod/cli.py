"""Command line front end.

Commands operate on JSON workspace documents (or fixture:NAME built-ins)
and print a report, human readable by default or as JSON with --json.
Exit codes: 0 success, 2 mathematical counterexample to a requested
assertion, 3 split failure or indeterminate outcome, 4 parse or
reference error.
"""

import argparse
import json
import random
import sys

from .abgroup import QuotientMap, subgroup_characters
from .central import Decomposition, all_central_images, central_image, \
    loop_back_iso, maximal_graded_subfields
from .cyclo import FieldNotSplit, format_scalar
from .docs import DocumentError, FIXTURES, algebra_workspace, load_document, \
    module_doc
from .envelope import graded_envelope
from .gmod import find_isomorphism, graded_centralizer, is_graded_simple, \
    is_simple_ungraded
from .invars import invariant_profile
from .loopfun import forgetful, induce, loop
from .randgen import random_algebra
from .selftest import run_suite
from . import __version__

OK, COUNTEREXAMPLE, INDETERMINATE, BADDOC = 0, 2, 3, 4


def _report(command, inputs, results, certificates=None, diagnostics=None):
    return {"command": command, "inputs": inputs, "results": results,
            "certificates": certificates or {}, "diagnostics": diagnostics
            or []}


def _matrix_doc(m):
    return [[format_scalar(x) for x in row] for row in m.data]


def _emit(report, args):
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print("command: %s" % report["command"])
    for k, v in sorted(report["inputs"].items()):
        print("  input %s: %s" % (k, v))
    for k, v in sorted(report["results"].items()):
        print("  %s: %s" % (k, v))
    for d in report["diagnostics"]:
        print("  diagnostic: %s" % d)


def _get_module(ws, args):
    if not args.module:
        raise DocumentError("--module NAME is required")
    return ws.module(args.module)


def _quotient_for(ws, V, args):
    if not args.subgroup:
        raise DocumentError("--subgroup NAME is required")
    H = ws.subgroup(args.subgroup)
    G = V.algebra.group
    if H.group != G:
        raise DocumentError("subgroup lives in a different group")
    pi = QuotientMap(G, H)
    if V.grading_group == pi.target:
        return V, pi
    if V.grading_group == G:
        return forgetful(V, pi), pi
    raise DocumentError("module grading matches neither G nor G/H")


# ---------------------------------------------------------------------------
# Commands.

def cmd_validate(args):
    ws = load_document(args.doc)
    bad = {}
    for name, A in ws.algebras.items():
        v = A.validate()
        if v:
            bad["algebra " + name] = v
    for name, V in ws.modules.items():
        v = V.validate()
        if v:
            bad["module " + name] = v
    results = {"algebras": len(ws.algebras), "modules": len(ws.modules),
               "violations": sum(len(v) for v in bad.values())}
    rep = _report("validate", {"doc": args.doc}, results,
                  diagnostics=["%s: %s" % (k, "; ".join(v))
                               for k, v in sorted(bad.items())])
    return rep, (COUNTEREXAMPLE if bad else OK)


def cmd_centralizer(args):
    ws = load_document(args.doc)
    W = _get_module(ws, args)
    C, cmats = graded_centralizer(W)
    results = {
        "dim": C.dim,
        "support": sorted(str(d) for d in set(C.degrees)),
        "graded_division": C.is_graded_division(),
    }
    certs = {"matrices": [_matrix_doc(m) for m in cmats],
             "degrees": [list(d.coords) for d in C.degrees]}
    return _report("centralizer", {"doc": args.doc, "module": args.module},
                   results, certs), OK


def cmd_simple(args):
    ws = load_document(args.doc)
    W = _get_module(ws, args)
    verdict, witness = (is_simple_ungraded(W) if args.ungraded
                        else is_graded_simple(W))
    results = {"graded": not args.ungraded, "verdict": verdict}
    certs = {}
    if verdict is False and witness is not None:
        certs["invariant_subspace"] = [[format_scalar(x) for x in v]
                                       for v in witness]
    code = OK if verdict is True else \
        (COUNTEREXAMPLE if verdict is False else INDETERMINATE)
    diag = [] if verdict is not None else ["simplicity test inconclusive"]
    return _report("simple", {"doc": args.doc, "module": args.module},
                   results, certs, diag), code


def cmd_loop(args):
    ws = load_document(args.doc)
    V = _get_module(ws, args)
    base, pi = _quotient_for(ws, V, args)
    L = loop(base, pi)
    results = {"dim": L.dim,
               "degrees": [list(d.coords) for d in L.degrees]}
    certs = {"module": module_doc(L, "R")}
    return _report("loop", {"doc": args.doc, "module": args.module,
                            "subgroup": args.subgroup}, results, certs), OK


def cmd_induce(args):
    ws = load_document(args.doc)
    V = _get_module(ws, args)
    base, pi = _quotient_for(ws, V, args)
    I = induce(base, pi)
    results = {"dim": I.module.dim,
               "degrees": [list(d.coords) for d in I.module.degrees],
               "transversal": [list(chi.exps) for chi in I.transversal]}
    certs = {"module": module_doc(I.module, "R")}
    return _report("induce", {"doc": args.doc, "module": args.module,
                              "subgroup": args.subgroup}, results, certs), OK


def _pick_subfield(ws, W, args):
    fields = maximal_graded_subfields(W)
    if args.subgroup:
        H = ws.subgroup(args.subgroup)
        for F in fields:
            if F.support == H:
                return F
        raise DocumentError("no maximal graded subfield has the given "
                            "support")
    return fields[0]


def cmd_central_image(args):
    ws = load_document(args.doc)
    W = _get_module(ws, args)
    F = _pick_subfield(ws, W, args)
    chis = subgroup_characters(F.support)
    idx = int(args.character) if args.character else 0
    if not 0 <= idx < len(chis):
        raise DocumentError("character index out of range")
    ci = central_image(W, F, chis[idx])
    gm = loop_back_iso(ci)
    results = {
        "dim": ci.module.dim,
        "subfield_support": sorted(str(h) for h in F.support.elements),
        "character_index": idx,
        "degrees": [list(d.coords) for d in ci.module.degrees],
        "loop_back_is_iso": gm.is_graded() and gm.is_module_map()
        and gm.is_invertible(),
    }
    certs = {"module": module_doc(ci.module, "R"),
             "loop_back_matrix": _matrix_doc(gm.matrix)}
    return _report("central-image",
                   {"doc": args.doc, "module": args.module}, results,
                   certs), OK


def cmd_decompose(args):
    ws = load_document(args.doc)
    W = _get_module(ws, args)
    F = _pick_subfield(ws, W, args)
    dec = Decomposition(W, F)
    vdim = central_image(W, F).module.dim
    results = {
        "center_support_order": dec.Z.order,
        "components": len(dec.isotypic),
        "component_dims": [c.dim for c in dec.isotypic],
        "multiplicities": [c.dim // vdim for c in dec.isotypic],
    }
    return _report("decompose", {"doc": args.doc, "module": args.module},
                   results), OK


def cmd_invariants(args):
    ws = load_document(args.doc)
    W = _get_module(ws, args)
    prof = invariant_profile(W)
    beta = []
    for t1 in prof.T.elements:
        for t2 in prof.T.elements:
            e = prof.beta.value_exp(t1, t2)
            if e:
                beta.append([list(t1.coords), list(t2.coords),
                             "z^%d" % e if e != 0 else "1"])
    results = {
        "support_order": prof.T.order,
        "center_order": prof.Z.order,
        "schur_index": prof.schur_index,
        "inertia_order": len(prof.inertia),
        "brauer": {
            "quotient": list(prof.brauer.factors),
            "support": sorted(list(t.coords) for t in prof.T.elements),
            "beta": beta,
        },
    }
    return _report("invariants", {"doc": args.doc, "module": args.module},
                   results), OK


def cmd_iso(args):
    ws = load_document(args.doc)
    V = _get_module(ws, args)
    if not args.other:
        raise DocumentError("--other NAME is required")
    W2 = ws.module(args.other)
    if V.grading_group == W2.grading_group:
        status, f = "no", None
        for g in V.grading_group.elements():
            s, m = find_isomorphism(V, W2, degree=g, seed=args.seed)
            if s == "iso":
                status, f = s, m
                break
            if s == "inconclusive":
                status = s
    else:
        status, f = find_isomorphism(V, W2, degree=None, seed=args.seed)
    results = {"status": status}
    certs = {}
    if f is not None:
        certs["matrix"] = _matrix_doc(f)
    code = OK if status == "iso" else \
        (COUNTEREXAMPLE if status == "no" else INDETERMINATE)
    return _report("iso", {"doc": args.doc, "module": args.module,
                           "other": args.other}, results, certs), code


def cmd_envelope(args):
    ws = load_document(args.doc)
    V = _get_module(ws, args)
    verdict, witness = is_simple_ungraded(V)
    if verdict is not True:
        code = COUNTEREXAMPLE if verdict is False else INDETERMINATE
        certs = {}
        if witness is not None:
            certs["invariant_subspace"] = [[format_scalar(x) for x in v]
                                           for v in witness]
        return _report("envelope", {"doc": args.doc,
                                    "module": args.module},
                       {"simple": verdict}, certs,
                       ["input module is not certified simple"]), code
    res = graded_envelope(V)
    results = {
        "inertia_order": len(res.inertia),
        "center_order": res.Z.order,
        "dim_V": V.dim,
        "dim_W": res.W.dim,
        "dim_Wprime": res.Wprime.dim,
        "dim_division": res.Dprime.dim,
    }
    certs = {"embedding": _matrix_doc(res.embed),
             "module": module_doc(res.W, "R")}
    return _report("envelope", {"doc": args.doc, "module": args.module},
                   results, certs), OK


def cmd_generate(args):
    rng = random.Random(args.seed)
    docs = []
    for _ in range(args.instances):
        A = random_algebra(rng, max_dim=args.max_order or 12)
        docs.append(algebra_workspace(A))
    out = docs[0] if len(docs) == 1 else docs
    print(json.dumps(out, indent=2, sort_keys=True))
    return None, OK


def cmd_selftest(args):
    passed, failed, failures = run_suite(args.seed, args.instances)
    results = {"instances": args.instances, "seed": args.seed,
               "checks_passed": passed, "checks_failed": failed}
    diag = ["%s on instance %d: %s" % f for f in failures]
    rep = _report("selftest", {}, results, diagnostics=diag)
    return rep, (OK if failed == 0 else COUNTEREXAMPLE)


COMMANDS = {
    "validate": cmd_validate,
    "centralizer": cmd_centralizer,
    "simple": cmd_simple,
    "loop": cmd_loop,
    "induce": cmd_induce,
    "central-image": cmd_central_image,
    "decompose": cmd_decompose,
    "invariants": cmd_invariants,
    "iso": cmd_iso,
    "envelope": cmd_envelope,
    "generate": cmd_generate,
    "selftest": cmd_selftest,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="loopmod",
        description="Exact computations with graded modules over "
                    "cyclotomic fields.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, doc=True, **extra):
        sp = sub.add_parser(name)
        if doc:
            sp.add_argument("doc", help="workspace JSON file or "
                            "fixture:NAME (%s)" % ", ".join(sorted(FIXTURES)))
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--seed", type=int, default=0)
        for flag, kw in extra.items():
            sp.add_argument("--" + flag.replace("_", "-"), **kw)
        return sp

    add("validate")
    add("centralizer", module={})
    sp = add("simple", module={})
    sp.add_argument("--ungraded", action="store_true")
    add("loop", module={}, subgroup={})
    add("induce", module={}, subgroup={})
    add("central-image", module={}, subgroup={}, character={})
    add("decompose", module={}, subgroup={})
    add("invariants", module={})
    add("iso", module={}, other={})
    add("envelope", module={})
    add("generate", doc=False, instances={"type": int, "default": 1},
        max_order={"type": int})
    add("selftest", doc=False, instances={"type": int, "default": 10})
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, code = COMMANDS[args.command](args)
    except DocumentError as e:
        print("error: %s" % e, file=sys.stderr)
        return BADDOC
    except FieldNotSplit as e:
        print("field does not split: %s" % e, file=sys.stderr)
        return INDETERMINATE
    if report is not None:
        _emit(report, args)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
