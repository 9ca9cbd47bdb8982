"""Loop and induced module constructions along a quotient map pi: G -> G/H.

Given a G/H-graded module V over a G-graded algebra R (acting through
the coarsened grading), the loop module refines the grading back to G by
tensoring each component with the fiber of pi; the induced module
averages V against a transversal of characters.  The two constructions
are isomorphic via explicit mutually inverse graded maps.
"""

from .abgroup import characters, dual_generators
from .cyclo import CycScalar, QQ, lcm
from .gmod import GradedModule, GradedMap, commutant_within, \
    graded_centralizer
from .linalg import ExactMatrix, Subspace


class LoopModule(GradedModule):
    """G-graded module with basis v_j (x) g over (g, j) pairs."""

    def __init__(self, base, pi, alg_proj=None):
        self.base = base
        self.pi = pi
        G = pi.source
        alg_proj = alg_proj or (lambda g: g)
        labels = []
        for g in G.elements():
            gbar = pi.project(g)
            for j in range(base.dim):
                if base.degrees[j] == gbar:
                    labels.append((g, j))
        self.labels = labels
        self.index = {lab: i for i, lab in enumerate(labels)}
        dim = len(labels)
        R = base.algebra
        action = []
        for b in range(R.dim):
            gp = alg_proj(R.degrees[b])
            Mb = base.action[b]
            m = ExactMatrix.zero(dim, dim, base.order)
            for col, (g, j) in enumerate(labels):
                tgt = gp * g
                for k in range(base.dim):
                    c = Mb.data[k][j]
                    if not c.is_zero():
                        row = self.index[(tgt, k)]
                        m.data[row][col] = c
            action.append(m)
        degrees = [g for (g, _) in labels]
        super().__init__(R, degrees, action, G, alg_proj)


def loop(V, pi, alg_proj=None):
    return LoopModule(V, pi, alg_proj)


def delta_maps(L):
    """The right-translation maps delta_h: v (x) g -> v (x) gh, h in the
    kernel of pi.  They span a graded subfield of the centralizer
    isomorphic to the group algebra of H."""
    out = {}
    for h in L.pi.kernel.elements:
        m = ExactMatrix.zero(L.dim, L.dim, L.order)
        for col, (g, j) in enumerate(L.labels):
            m.data[L.index[(g * h, j)]][col] = CycScalar.one(L.order)
        out[h] = m
    return out


def forgetful(W, pi):
    """Push a G-graded module down to a G/H-graded one through pi."""
    return W.forget_to(pi.target, pi.project)


def default_transversal(pi):
    """A deterministic transversal of H-perp in the character group: the
    first character in lexicographic order from each restriction class
    to H = ker pi."""
    seen = []
    out = []
    for chi in characters(pi.source):
        res = chi.restrict(pi.kernel)
        if res not in seen:
            seen.append(res)
            out.append(chi)
    assert len(out) == pi.kernel.order
    return out


class InducedModule:
    """Transversal-indexed copies of V with the averaged G-grading.

    Raw coordinates index pairs (j, m): transversal character chi_j
    tensor base vector v_m.  The graded basis is an exact simultaneous
    eigenbasis of the dual-group action; P maps graded coordinates to
    raw ones.
    """

    def __init__(self, base, pi, transversal=None):
        self.base = base
        self.pi = pi
        G = pi.source
        H = pi.kernel
        self.transversal = transversal or default_transversal(pi)
        n = len(self.transversal)
        assert n == H.order
        self.raw_labels = [(j, m) for j in range(n) for m in range(base.dim)]
        self.raw_index = {lab: i for i, lab in enumerate(self.raw_labels)}
        dim = n * base.dim
        order = lcm(base.order, max(G.exponent, 1))
        self.order = order
        R = base.algebra

        # raw action: block diagonal with scalar twists chi_j(g')^{-1}
        raw_action = []
        for b in range(R.dim):
            gp = R.degrees[b]
            Mb = base.action[b]
            m = ExactMatrix.zero(dim, dim, order)
            for j, chi in enumerate(self.transversal):
                w = chi.value(gp, order).inverse()
                for col in range(base.dim):
                    for row in range(base.dim):
                        c = Mb.data[row][col]
                        if not c.is_zero():
                            m.data[j * base.dim + row][j * base.dim + col] = \
                                w * c.lift(order)
            raw_action.append(m)
        self.raw_action = raw_action

        # the dual group acts on raw coordinates; grade by simultaneous
        # eigenspaces
        gens = dual_generators(G)
        gen_ops = [self._dual_operator(chi) for chi in gens]
        cols = []   # graded basis vectors, in raw coordinates
        degs = []
        for g in G.elements():
            gbar = pi.project(g)
            rows = [self.raw_index[(j, m)]
                    for j in range(n) for m in range(base.dim)
                    if base.degrees[m] == gbar]
            if not rows:
                continue
            sub = self._eigenspace(gen_ops, gens, g, rows)
            for v in sub:
                cols.append(v)
                degs.append(g)
        assert len(cols) == dim, "eigenspaces do not exhaust the module"
        self.P = ExactMatrix(list(zip(*cols)))       # graded -> raw
        self.Pinv = self.P.inverse()
        action = [self.Pinv @ a @ self.P for a in raw_action]
        self.module = GradedModule(R, degs, action, G, lambda g: g)

    def _dual_operator(self, chi):
        """The action of a character of G on raw coordinates."""
        n = len(self.transversal)
        base = self.base
        H = self.pi.kernel
        m = ExactMatrix.zero(n * base.dim, n * base.dim, self.order)
        for j, chij in enumerate(self.transversal):
            prod = chi * chij
            res = prod.restrict(H)
            k = next(i for i, c in enumerate(self.transversal)
                     if c.restrict(H) == res)
            varpi = prod * self.transversal[k].inverse()
            # varpi lies in H-perp, so its value on a coset is well defined
            for mv in range(base.dim):
                g0 = self.pi.section(base.degrees[mv])
                w = varpi.value(g0, self.order)
                m.data[self.raw_index[(k, mv)]][self.raw_index[(j, mv)]] = w
        return m

    def _eigenspace(self, gen_ops, gens, g, rows):
        """Joint eigenvectors supported on the given raw rows, with
        eigenvalue chi(g) for each dual generator chi."""
        dim = len(self.raw_labels)
        basis = []
        for r in rows:
            v = [CycScalar.zero(self.order)] * dim
            v[r] = CycScalar.one(self.order)
            basis.append(v)
        for op, chi in zip(gen_ops, gens):
            if not basis:
                break
            lam = chi.value(g, self.order)
            cols = []
            for v in basis:
                w = op.apply(v)
                cols.append([a - lam * b for a, b in zip(w, v)])
            K = ExactMatrix(list(zip(*cols)))
            ker = K.kernel()
            newbasis = []
            for cv in ker:
                w = [CycScalar.zero(self.order)] * dim
                for c, v in zip(cv, basis):
                    if not c.is_zero():
                        w = [x + c * y for x, y in zip(w, v)]
                newbasis.append(w)
            basis = newbasis
        return basis


def induce(V, pi, transversal=None):
    return InducedModule(V, pi, transversal)


def phi_raw(L, I):
    """Matrix of the loop -> induced map in raw induced coordinates."""
    assert L.base is I.base and L.pi is I.pi
    order = I.order
    raw = ExactMatrix.zero(len(I.raw_labels), L.dim, order)
    for col, (g, m) in enumerate(L.labels):
        for j, chi in enumerate(I.transversal):
            raw.data[I.raw_index[(j, m)]][col] = \
                chi.value(g, order).inverse()
    return raw


def phi_map(L, I):
    """The graded isomorphism loop -> induced:
    v (x) g maps to sum_j chi_j(g)^{-1} chi_j (x) v."""
    return GradedMap(L, I.module, I.Pinv @ phi_raw(L, I),
                     L.pi.source.identity)


def psi_map(L, I):
    """The inverse isomorphism induced -> loop:
    chi_j (x) v maps to (1/|H|) sum_h chi_j(gh) v (x) gh."""
    assert L.base is I.base and L.pi is I.pi
    order = lcm(I.order, L.order)
    n = len(I.transversal)
    inv_n = CycScalar.rational(QQ(1, n), order)
    raw = ExactMatrix.zero(L.dim, len(I.raw_labels), order)
    for col, (j, m) in enumerate(I.raw_labels):
        chi = I.transversal[j]
        g0 = L.pi.section(L.base.degrees[m])
        for h in L.pi.kernel.elements:
            g = g0 * h
            raw.data[L.index[(g, m)]][col] = inv_n * chi.value(g, order)
    return GradedMap(I.module, L, raw @ I.P, L.pi.source.identity)


def transversal_identification(I1, I2):
    """The canonical raw-coordinate identification of two induced
    modules whose transversals differ position-wise by factors in
    H-perp: chi_j omega (x) v = omega(deg v) (chi_j (x) v).  Returns a
    diagonal matrix mapping I2 raw coordinates to I1 raw coordinates."""
    assert I1.base is I2.base and I1.pi is I2.pi
    order = lcm(I1.order, I2.order)
    dim = len(I1.raw_labels)
    m = ExactMatrix.zero(dim, dim, order)
    H = I1.pi.kernel
    for j in range(len(I1.transversal)):
        omega = I2.transversal[j] * I1.transversal[j].inverse()
        assert all(omega.value_exp(h) == 0 for h in H.elements), \
            "transversals are not position-wise H-perp related"
        for mv in range(I1.base.dim):
            g0 = I1.pi.section(I1.base.degrees[mv])
            i = I1.raw_index[(j, mv)]
            m.data[i][i] = omega.value(g0, order)
    return m


# ---------------------------------------------------------------------------
# Transitivity.

def relabel_grading(V, iso, target_group):
    """Transport a module's grading along a degree-wise bijection."""
    return GradedModule(V.algebra, [iso(d) for d in V.degrees], V.action,
                        target_group,
                        lambda g, _p=V.proj: iso(_p(g)))


def transitivity_iso(V, pi, pi1, pi2):
    """For K <= H <= G with pi: G -> G/H, pi1: G -> G/K and
    pi2: G/K -> (G/K)/im(H): the permutation isomorphism
    L_pi(V) -> L_pi1(L_pi2(V')) sending v (x) g to (v (x) pi1(g)) (x) g,
    where V' is V with degrees transported to the target of pi2.

    Returns (map, inner_loop, outer_loop).
    """
    # identify G/H with (G/K)/im(H) through the section of pi
    iso_table = {}
    for gbar in pi.target.elements():
        iso_table[gbar] = pi2.project(pi1.project(pi.section(gbar)))
    assert len(set(iso_table.values())) == pi.target.order

    Vp = relabel_grading(V, lambda d: iso_table[d], pi2.target)
    inner = loop(Vp, pi2, alg_proj=pi1.project)
    outer = loop(inner, pi1)
    L = loop(V, pi)
    m = ExactMatrix.zero(outer.dim, L.dim, L.order)
    one = CycScalar.one(L.order)
    for col, (g, j) in enumerate(L.labels):
        jin = inner.index[(pi1.project(g), j)]
        row = outer.index[(g, jin)]
        m.data[row][col] = one
    return GradedMap(L, outer, m, pi.source.identity), inner, outer


# ---------------------------------------------------------------------------
# The loop functor on morphisms.

def loop_morphism(LV, LVp, phi, chi):
    """Extend an isomorphism phi: V^chi -> V' of G/H-graded modules to
    the loops: v (x) g0 maps to chi(h) phi(v) (x) g0, where g0 = xi(gbar) h
    splits off the kernel part h.  chi is a LocalCharacter on H."""
    pi = LV.pi
    order = lcm(lcm(LV.order, LVp.order), max(pi.kernel.group.exponent, 1))
    m = ExactMatrix.zero(LVp.dim, LV.dim, order)
    for col, (g0, j) in enumerate(LV.labels):
        h = pi.section(pi.project(g0)).inverse() * g0
        w = chi.value(h, order)
        for k in range(LVp.base.dim):
            c = phi.data[k][j]
            if not c.is_zero():
                m.data[LVp.index[(g0, k)]][col] = w * c.lift(order)
    return GradedMap(LV, LVp, m, pi.source.identity)


# ---------------------------------------------------------------------------
# Centralizer identities.

def loop_centralizer_operators(L):
    """The image of the loop of the graded centralizer of the base
    inside operators on the loop module: for each homogeneous d of
    degree gbar and each g over gbar, the map v (x) g0 -> (v d) (x) g0 g.

    Returns a list of (matrix, degree) pairs.
    """
    V = L.base
    C, cmats = graded_centralizer(V)
    out = []
    for d_mat, dbar in zip(cmats, C.degrees):
        for g in L.pi.source.elements():
            if L.pi.project(g) != dbar:
                continue
            m = ExactMatrix.zero(L.dim, L.dim, lcm(L.order, d_mat.order))
            for col, (g0, j) in enumerate(L.labels):
                tgt = g0 * g
                for k in range(V.dim):
                    c = d_mat.data[k][j]
                    if not c.is_zero():
                        m.data[L.index[(tgt, k)]][col] = c
            out.append((m, g))
    return out


def centralizer_loop_identity(L):
    """Certify that the loop of the base centralizer equals the
    centralizer of the delta subfield inside the graded centralizer of
    the loop module.

    Returns (loop_side, delta_side, equal).
    """
    lhs = [m for m, _ in loop_centralizer_operators(L)]
    CL, clmats = graded_centralizer(L)
    deltas = list(delta_maps(L).values())
    rhs = commutant_within(list(clmats), deltas)
    order = 1
    for m in lhs + rhs:
        order = lcm(order, m.order)
    span_l = Subspace(L.dim * L.dim, order)
    for m in lhs:
        span_l.add(m.flatten())
    span_r = Subspace(L.dim * L.dim, order)
    for m in rhs:
        span_r.add(m.flatten())
    equal = span_l.dim == span_r.dim and \
        all(span_l.contains(m.flatten()) for m in rhs)
    return lhs, rhs, equal


def is_thin(V, pi):
    """Thinness of the pregrading associated with V along pi, decided
    through graded simplicity of the loop module."""
    from .gmod import is_graded_simple
    verdict, _ = is_graded_simple(loop(V, pi))
    return verdict
