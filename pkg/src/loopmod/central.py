"""Central images of graded-simple modules and their twists.

Given a graded simple module W whose graded centralizer D is a split
graded division algebra, each maximal graded subfield F of D (with an
augmentation) produces a quotient module V = W / W ker, graded by G/H;
W is recovered as the loop of V.  Twisting V by characters of H walks
through all central images over the same subfield.
"""

from .abgroup import Bicharacter, QuotientMap, Subgroup, \
    maximal_isotropic_subgroups, subgroup_characters
from .cyclo import CycScalar, FieldNotSplit, lcm
from .galg import normalize_subfield_basis, primitive_central_idempotents, \
    center_of
from .gmod import GradedModule, GradedMap, find_isomorphism, \
    graded_centralizer
from .linalg import ExactMatrix, Subspace
from .loopfun import loop


def _as_root_exponent(value, L):
    """Find k with value == zeta_L^k, or raise FieldNotSplit."""
    if L <= 1:
        if value == CycScalar.one():
            return 0
    else:
        for k in range(L):
            if value == CycScalar.zeta(L, k):
                return k
    raise FieldNotSplit("scalar %s is not an L-th root of unity (L=%d)"
                        % (value, L))


def commutation_bicharacter(C):
    """Support subgroup T and bicharacter beta of a graded division
    algebra with one dimensional components:
    c_t1 c_t2 = beta(t1, t2) c_t2 c_t1."""
    G = C.group
    T = Subgroup(G, set(C.degrees))
    idx = {}
    for i, d in enumerate(C.degrees):
        if d in idx:
            raise FieldNotSplit("component of degree %r has dim > 1" % (d,))
        idx[d] = i
    L = max(T.group.exponent, 1)
    exp = {}
    for t1 in T.elements:
        for t2 in T.elements:
            x = C.multiply(C.basis_vec(idx[t1]), C.basis_vec(idx[t2]))
            y = C.multiply(C.basis_vec(idx[t2]), C.basis_vec(idx[t1]))
            lam = None
            for a, b in zip(x, y):
                if not b.is_zero():
                    lam = a / b
                    break
            assert lam is not None
            for a, b in zip(x, y):
                assert a == lam * b
            exp[(t1, t2)] = _as_root_exponent(lam, L)
    return T, Bicharacter(G, T.elements, L, exp)


class GradedSubfield:
    """A maximal graded subfield of the centralizer of W, with the
    normalized (augmentation-compatible) basis as operators on W."""

    def __init__(self, W, support, ops):
        self.W = W
        self.support = support        # subgroup H of the grading group
        self.ops = ops                # dict h -> ExactMatrix on W

    def __repr__(self):
        return "GradedSubfield(|H|=%d)" % self.support.order


def maximal_graded_subfields(W):
    """All maximal graded subfields of C(W), one per maximal isotropic
    subgroup of the commutation bicharacter."""
    C, cmats = graded_centralizer(W)
    assert C.is_graded_division(), "centralizer is not graded division"
    T, beta = commutation_bicharacter(C)
    out = []
    for H in maximal_isotropic_subgroups(beta):
        c = normalize_subfield_basis(C, H)
        order = W.order
        for v in c.values():
            for x in v:
                order = lcm(order, x.order)
        ops = {}
        for h, coords in c.items():
            m = ExactMatrix.zero(W.dim, W.dim, order)
            for co, cm in zip(coords, cmats):
                if not co.is_zero():
                    m = m + cm.scale(co)
            ops[h] = m
        out.append(GradedSubfield(W, H, ops))
    return out


def subfield_is_self_centralizing(F, cmats):
    """Maximality certificate: the centralizer of F inside C(W) is F."""
    from .gmod import commutant_within
    comm = commutant_within(list(cmats), list(F.ops.values()))
    return len(comm) == F.support.order


# ---------------------------------------------------------------------------

class CentralImage:
    """V = W / W ker(rho_chi), graded by G/H, with the projection gamma
    and the section-aligned embedding back into W."""

    def __init__(self, W, F, chi=None):
        self.W = W
        self.F = F
        G = W.grading_group
        H = F.support
        self.pi = QuotientMap(G, H)
        chis = subgroup_characters(H)
        self.chi = chi if chi is not None else chis[0]
        order = W.order
        for m in F.ops.values():
            order = lcm(order, m.order)
        order = lcm(order, max(H.group.exponent, 1))

        # the subspace W * ker(rho_chi), spanned by (c_h - chi(h)) w
        K = Subspace(W.dim, order)
        ident = ExactMatrix.identity(W.dim, order)
        for h, op in F.ops.items():
            d = op - ident.scale(self.chi.value(h, order))
            for col in d.columns():
                K.add(col)
        # transversal components form a complement
        theta = set(g.coords for g in self.pi.transversal())
        comp = [i for i, d in enumerate(W.degrees) if d.coords in theta]
        assert len(comp) + K.dim == W.dim, "complement dimension mismatch"
        cols = []
        for i in comp:
            v = [CycScalar.zero(order)] * W.dim
            v[i] = CycScalar.one(order)
            cols.append(v)
        cols.extend(K.basis())
        B = ExactMatrix(list(zip(*cols)))
        Binv = B.inverse()
        self.embed = ExactMatrix([[B.data[r][c] for c in range(len(comp))]
                                  for r in range(W.dim)])
        self.gamma = ExactMatrix([Binv.data[r] for r in range(len(comp))])
        self.comp_indices = comp

        degs = [self.pi.project(W.degrees[i]) for i in comp]
        action = [self.gamma @ m @ self.embed for m in W.action]
        proj = (lambda g, _p=W.proj, _q=self.pi.project: _q(_p(g)))
        self.module = GradedModule(W.algebra, degs, action,
                                   self.pi.target, proj)


def central_image(W, F, chi=None):
    return CentralImage(W, F, chi)


def gamma_degree_bijective(ci):
    """The projection restricts to a bijection W_g -> V_{gbar} for every
    g in the grading group."""
    W = ci.W
    for g in W.grading_group.elements():
        rows = ci.module.component_indices(ci.pi.project(g))
        cols = W.component_indices(g)
        if len(rows) != len(cols):
            return False
        sub = ExactMatrix([[ci.gamma.data[r][c] for c in cols]
                           for r in rows]) if rows else None
        if sub is not None and not sub.is_invertible():
            return False
    return True


def loop_back_iso(ci):
    """The explicit graded isomorphism L_pi(V) -> W sending v (x) g to
    the unique preimage of v in W_g."""
    W = ci.W
    L = loop(ci.module, ci.pi)
    order = lcm(L.order, W.order)
    m = ExactMatrix.zero(W.dim, L.dim, order)
    for g in W.grading_group.elements():
        cols = W.component_indices(g)
        rows = ci.module.component_indices(ci.pi.project(g))
        if not cols:
            continue
        sub = ExactMatrix([[ci.gamma.data[r][c] for c in cols]
                           for r in rows])
        inv = sub.inverse()
        for a, j in enumerate(rows):     # V basis index j
            col = L.index[(g, j)]
            for b, w_idx in enumerate(cols):
                m.data[w_idx][col] = inv.data[b][a]
    return GradedMap(L, W, m, W.grading_group.identity)


# ---------------------------------------------------------------------------
# Twists.

def twist_by_character(V, chi, pi):
    """Twist a G/H-graded module by a character of H: the action of a
    degree-g algebra element on the degree-kbar component is scaled by
    chi(g xi(kbar) xi(g kbar)^{-1})."""
    G = pi.source
    order = lcm(V.order, max(G.exponent, 1))
    R = V.algebra
    action = []
    for b in range(R.dim):
        g = R.degrees[b]
        m = V.action[b]
        out = ExactMatrix.zero(V.dim, V.dim, order)
        for c in range(V.dim):
            kbar = V.degrees[c]
            h = g * pi.section(kbar) * pi.section(pi.project(g) * kbar).inverse()
            w = chi.value(h, order)
            for r in range(V.dim):
                if not m.data[r][c].is_zero():
                    out.data[r][c] = w * m.data[r][c].lift(order)
        action.append(out)
    return GradedModule(R, list(V.degrees), action, V.grading_group, V.proj)


def twist_by_automorphism(V, chi):
    """Twist by the algebra automorphism scaling each degree-g component
    by chi(g), for a character chi of the algebra's grading group."""
    R = V.algebra
    order = lcm(V.order, max(R.group.exponent, 1))
    action = []
    for b in range(R.dim):
        w = chi.value(R.degrees[b], order)
        action.append(V.action[b].scale(w))
    return GradedModule(R, list(V.degrees), action, V.grading_group, V.proj)


def all_central_images(W, F):
    """One central image per character of the subfield's support."""
    return [CentralImage(W, F, chi)
            for chi in subgroup_characters(F.support)]


def loop_iso_implies_twist(V, Vp, pi, seed=0):
    """If the loops are graded isomorphic, find a character chi of H
    with V^chi isomorphic to V'.  Returns (chi, iso matrix) or None."""
    for chi in subgroup_characters(pi.kernel):
        Vchi = twist_by_character(V, chi, pi)
        status, f = find_isomorphism(Vchi, Vp, degree=pi.target.identity,
                                     seed=seed)
        if status == "iso":
            return chi, f
    return None


# ---------------------------------------------------------------------------
# Isotypic decomposition.

class Decomposition:
    def __init__(self, W, F):
        self.W = W
        self.F = F
        G = W.grading_group
        C, cmats = graded_centralizer(W)
        self.C = C
        self.cmats = cmats
        cent = center_of(C)
        self.Z = Subgroup(G, [g for _, g in cent])
        self.piZ = QuotientMap(G, self.Z)
        eps_coords = primitive_central_idempotents(C)
        order = W.order
        for v in eps_coords:
            for x in v:
                order = lcm(order, x.order)
        self.eps_chars = subgroup_characters(self.Z)
        self.eps_ops = []
        for coords in eps_coords:
            m = ExactMatrix.zero(W.dim, W.dim, order)
            for co, cm in zip(coords, cmats):
                if not co.is_zero():
                    m = m + cm.scale(co)
            self.eps_ops.append(m)
        self.isotypic = [self._component(op) for op in self.eps_ops]

    def _component(self, eps):
        """W eps as a G/Z-graded module over the same algebra."""
        W = self.W
        order = eps.order
        basis = []
        degs = []
        for q in self.piZ.target.elements():
            sub = Subspace(W.dim, order)
            for i, d in enumerate(W.degrees):
                if self.piZ.project(d) == q:
                    v = [CycScalar.zero(order)] * W.dim
                    v[i] = CycScalar.one(order)
                    sub.add(eps.apply(v))
            for v in sub.basis():
                basis.append(v)
                degs.append(q)
        B = ExactMatrix(list(zip(*basis)))
        # action restricted to the component: solve B X = M B columnwise
        action = []
        for m in W.action:
            MB = m @ B
            X = []
            for j in range(B.cols):
                x = B.solve(MB.column_vec(j))
                assert x is not None, "component is not invariant"
                X.append(x)
            action.append(ExactMatrix(list(zip(*X))))
        proj = (lambda g, _p=W.proj, _q=self.piZ.project: _q(_p(g)))
        mod = GradedModule(W.algebra, degs, action, self.piZ.target, proj)
        mod.basis_in_W = B
        return mod

    def reconstruct_iso(self, i):
        """The graded isomorphism W -> L_piZ(W eps_i), w_g -> w_g eps (x) g."""
        W = self.W
        comp = self.isotypic[i]
        L = loop(comp, self.piZ)
        eps = self.eps_ops[i]
        B = comp.basis_in_W
        order = lcm(L.order, eps.order)
        m = ExactMatrix.zero(L.dim, W.dim, order)
        for col in range(W.dim):
            g = W.degrees[col]
            v = [CycScalar.zero(order)] * W.dim
            v[col] = CycScalar.one(order)
            w = eps.apply(v)
            coords = B.solve(w)
            assert coords is not None
            for k, c in enumerate(coords):
                if not c.is_zero():
                    m.data[L.index[(g, k)]][col] = c
        return GradedMap(W, L, m, W.grading_group.identity)
