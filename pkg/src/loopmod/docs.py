"""JSON workspace documents for the CLI.

A workspace names groups, subgroups, quotients, algebras, modules and
characters; algebras and modules use sparse entry triples with scalar
literals in the `z^k` grammar of the cyclo module.  The declared
cyclotomic_order must be a multiple of every group exponent used.
"""

import json

from .abgroup import Character, FinAbGroup, QuotientMap, Subgroup
from .cyclo import CycScalar, format_scalar, lcm, parse_scalar
from .galg import Cocycle, GradedAlgebra, group_algebra, smash_product, \
    twisted_group_algebra
from .gmod import GradedModule
from .linalg import ExactMatrix


class DocumentError(Exception):
    pass


class Workspace:
    def __init__(self):
        self.order = 1
        self.groups = {}
        self.subgroups = {}
        self.quotients = {}
        self.algebras = {}
        self.modules = {}
        self.characters = {}

    def group(self, name):
        if name not in self.groups:
            raise DocumentError("unknown group %r" % name)
        return self.groups[name]

    def module(self, name):
        if name not in self.modules:
            raise DocumentError("unknown module %r" % name)
        return self.modules[name]

    def subgroup(self, name):
        if name not in self.subgroups:
            raise DocumentError("unknown subgroup %r" % name)
        return self.subgroups[name]

    def character(self, name):
        if name not in self.characters:
            raise DocumentError("unknown character %r" % name)
        return self.characters[name]


def _element(G, coords):
    if len(coords) != len(G.factors):
        raise DocumentError("element %r has wrong length for %r"
                            % (coords, G))
    return G.element(coords)


def load_workspace(doc):
    """Build a Workspace from a parsed JSON document (a dict)."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    ws = Workspace()
    ws.order = int(doc.get("cyclotomic_order", 1))
    if ws.order < 1:
        raise DocumentError("cyclotomic_order must be positive")
    for name, entry in doc.get("groups", {}).items():
        ws.groups[name] = FinAbGroup(entry["invariant_factors"])
    for G in ws.groups.values():
        if G.exponent > 1 and ws.order % G.exponent != 0:
            raise DocumentError(
                "cyclotomic_order %d is not a multiple of the exponent "
                "of %r" % (ws.order, G))
    for name, entry in doc.get("subgroups", {}).items():
        G = ws.group(entry["group"])
        elems = [_element(G, c) for c in entry["elements"]]
        ws.subgroups[name] = Subgroup(G, elems)
    for name, entry in doc.get("quotients", {}).items():
        G = ws.group(entry["group"])
        H = ws.subgroup(entry["by"])
        if H.group != G:
            raise DocumentError("quotient %r: subgroup lives elsewhere"
                                % name)
        ws.quotients[name] = QuotientMap(G, H)
    for name, entry in doc.get("characters", {}).items():
        G = ws.group(entry["group"])
        ws.characters[name] = Character(G, entry["exponents"])
    for name, entry in doc.get("algebras", {}).items():
        ws.algebras[name] = _load_algebra(ws, entry)
    for name, entry in doc.get("modules", {}).items():
        ws.modules[name] = _load_module(ws, entry)
    return ws


def _load_algebra(ws, entry):
    G = ws.group(entry["group"])
    dim = int(entry["dim"])
    degrees = [_element(G, c) for c in entry["degrees"]]
    if len(degrees) != dim:
        raise DocumentError("algebra degree list length mismatch")
    unit = [parse_scalar(s, ws.order) for s in entry["unit"]]
    if len(unit) != dim:
        raise DocumentError("algebra unit length mismatch")
    mult = {}
    for i, j, k, s in entry["structure"]:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise DocumentError("structure index out of range")
        mult.setdefault((i, j), {})[k] = parse_scalar(s, ws.order)
    return GradedAlgebra(G, degrees, mult, unit, ws.order)


def _load_module(ws, entry):
    aname = entry["algebra_ref"]
    if aname not in ws.algebras:
        raise DocumentError("unknown algebra %r" % aname)
    A = ws.algebras[aname]
    gg = entry.get("grading_group")
    if gg is None or (gg in ws.groups and ws.groups[gg] == A.group):
        group = A.group
        proj = (lambda g: g)
    elif gg in ws.quotients:
        pi = ws.quotients[gg]
        if pi.source != A.group:
            raise DocumentError("quotient %r does not start at the "
                                "algebra's group" % gg)
        group = pi.target
        proj = pi.project
    elif gg in ws.groups:
        raise DocumentError("grading group %r does not match the "
                            "algebra's group" % gg)
    else:
        raise DocumentError("unknown grading group %r" % gg)
    dim = int(entry["dim"])
    degrees = [_element(group, c) for c in entry["degrees"]]
    if len(degrees) != dim:
        raise DocumentError("module degree list length mismatch")
    mats = [ExactMatrix.zero(dim, dim, ws.order) for _ in range(A.dim)]
    for b, i, j, s in entry["action"]:
        if not (0 <= b < A.dim and 0 <= i < dim and 0 <= j < dim):
            raise DocumentError("action index out of range")
        mats[b].data[i][j] = parse_scalar(s, ws.order)
    return GradedModule(A, degrees, mats, group, proj)


# ---------------------------------------------------------------------------
# Serialization.

def algebra_doc(A, group_name):
    structure = []
    for (i, j), terms in sorted(A.mult.items()):
        for k in sorted(terms):
            structure.append([i, j, k, format_scalar(terms[k])])
    return {
        "group": group_name,
        "dim": A.dim,
        "degrees": [list(d.coords) for d in A.degrees],
        "unit": [format_scalar(x) for x in A.unit],
        "structure": structure,
    }


def module_doc(V, algebra_name, grading_name=None):
    action = []
    for b, m in enumerate(V.action):
        for i in range(V.dim):
            for j in range(V.dim):
                if not m.data[i][j].is_zero():
                    action.append([b, i, j, format_scalar(m.data[i][j])])
    out = {
        "algebra_ref": algebra_name,
        "dim": V.dim,
        "degrees": [list(d.coords) for d in V.degrees],
        "action": action,
    }
    if grading_name is not None:
        out["grading_group"] = grading_name
    return out


def workspace_doc(order, groups=None, algebras=None, modules=None,
                  subgroups=None, quotients=None, characters=None):
    doc = {"cyclotomic_order": order}
    if groups:
        doc["groups"] = {n: {"invariant_factors": list(G.factors)}
                         for n, G in groups.items()}
    if subgroups:
        doc["subgroups"] = {
            n: {"group": gname,
                "elements": sorted(list(h.coords) for h in H.elements)}
            for n, (gname, H) in subgroups.items()}
    if quotients:
        doc["quotients"] = {n: {"group": g, "by": h}
                            for n, (g, h) in quotients.items()}
    if characters:
        doc["characters"] = {n: {"group": g, "exponents": list(chi.exps)}
                             for n, (g, chi) in characters.items()}
    if algebras:
        doc["algebras"] = algebras
    if modules:
        doc["modules"] = modules
    return doc


def algebra_workspace(A, order=None, name="R", group_name="G",
                      with_regular=True):
    """A self-contained workspace for one algebra, optionally with its
    regular module named W."""
    from .fixtures import regular_module
    order = order or lcm(A.order, max(A.group.exponent, 1))
    modules = {}
    if with_regular:
        W = regular_module(A)
        order = lcm(order, W.order)
        modules["W"] = module_doc(W, name, group_name)
    doc = workspace_doc(order, groups={group_name: A.group},
                        algebras={name: algebra_doc(A, group_name)},
                        modules=modules or None)
    return doc


# ---------------------------------------------------------------------------
# Shipped fixtures.

def _pauli_doc():
    from .fixtures import pauli_twisted_algebra
    return algebra_workspace(pauli_twisted_algebra(), order=2)


def _m2q_doc():
    # the rational form: F^sigma(Z2) with u^2 = -1; order 2 keeps the
    # scalars rational since Q(zeta_2) = Q
    G = FinAbGroup([2])
    e, g = G.element([0]), G.element([1])
    minus = CycScalar.rational(-1, 2)
    one = CycScalar.one(2)
    sigma = Cocycle(G, {(e, e): one, (e, g): one, (g, e): one,
                        (g, g): minus}, 2)
    return algebra_workspace(twisted_group_algebra(G, sigma), order=2)


def _fz2_doc():
    doc = algebra_workspace(group_algebra(FinAbGroup([2])), order=2)
    doc["subgroups"] = {"H": {"group": "G", "elements": [[0], [1]]},
                        "trivial": {"group": "G", "elements": [[0]]}}
    doc["quotients"] = {"Q1": {"group": "G", "by": "H"}}
    # the two one dimensional modules, graded by the trivial quotient
    for name, s in (("Vtriv", "1"), ("Vsign", "-1")):
        doc["modules"][name] = {
            "algebra_ref": "R", "dim": 1, "grading_group": "Q1",
            "degrees": [[]],
            "action": [[0, 0, 0, "1"], [1, 0, 0, s]],
        }
    return doc


def _z4z4_doc():
    G = FinAbGroup([4, 4])
    sigma = Cocycle.from_alternating_matrix(G, [[0, -1], [1, 0]])
    doc = algebra_workspace(twisted_group_algebra(G, sigma), order=4,
                            with_regular=False)
    doc["subgroups"] = {"K": {"group": "G",
                              "elements": [[0, 0], [0, 2], [2, 0], [2, 2]]}}
    return doc


def _smash_doc(n):
    A = FinAbGroup([n])
    B = FinAbGroup([n])

    def p(b, a):
        if n == 1:
            return CycScalar.one()
        return CycScalar.zeta(n) ** (b.coords[0] * a.coords[0])

    S = smash_product(A, B, p)
    return algebra_workspace(S, order=max(n, 1),
                             with_regular=(S.dim <= 9))


FIXTURES = {
    "pauli": _pauli_doc,
    "m2q": _m2q_doc,
    "fz2": _fz2_doc,
    "z4z4": _z4z4_doc,
    "smash2": lambda: _smash_doc(2),
    "smash3": lambda: _smash_doc(3),
    "smash4": lambda: _smash_doc(4),
}


def load_document(path):
    """Load a workspace from a file path or a fixture:NAME reference."""
    if path.startswith("fixture:"):
        name = path[len("fixture:"):]
        if name not in FIXTURES:
            raise DocumentError("unknown fixture %r (have: %s)"
                                % (name, ", ".join(sorted(FIXTURES))))
        return load_workspace(FIXTURES[name]())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise DocumentError("cannot read %s: %s" % (path, e))
    except ValueError as e:
        raise DocumentError("bad JSON in %s: %s" % (path, e))
    return load_workspace(doc)
