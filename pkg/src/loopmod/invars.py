"""Classification invariants of graded simple modules.

From the graded centralizer D = C(W) with support T and commutation
bicharacter beta: the radical Z of beta, the inertia group Z-perp, the
graded Brauer invariant (the class of the division algebra on T/Z) and
the graded Schur index |H/Z|.  Also explicit models of the simple
module of a twisted group algebra and of smash products.
"""

from math import gcd, isqrt

from .abgroup import QuotientMap, Subgroup, annihilator, characters, \
    subgroup_as_group
from .central import commutation_bicharacter, twist_by_automorphism
from .cyclo import CycScalar, lcm
from .galg import smash_product
from .gmod import GradedModule, find_isomorphism, graded_centralizer, \
    matrices_to_algebra
from .linalg import ExactMatrix, Subspace


class BrauerInvariant:
    """Canonical form of a central graded division algebra class: the
    invariant factors of T/Z together with the bicharacter exponent
    matrix on the Smith generators (entries mod the generator orders)."""

    def __init__(self, factors, matrix):
        self.factors = tuple(factors)
        self.matrix = tuple(tuple(row) for row in matrix)

    def __eq__(self, other):
        return (isinstance(other, BrauerInvariant)
                and self.factors == other.factors
                and self.matrix == other.matrix)

    __hash__ = None

    def __repr__(self):
        return "BrauerInvariant(%r, %r)" % (self.factors, self.matrix)


def brauer_from_bicharacter(T, Z, beta):
    """Push beta down to T/Z and read it off on Smith generators."""
    T_abs, embed, lookup = subgroup_as_group(T)
    Z_abs = Subgroup(T_abs, [lookup[z] for z in Z.elements])
    piQ = QuotientMap(T_abs, Z_abs)
    Q = piQ.target
    gens = Q.generators()
    reps = [embed(piQ.section(q)) for q in gens]
    L = beta.L
    matrix = []
    for i, t1 in enumerate(reps):
        row = []
        for j, t2 in enumerate(reps):
            e = beta.value_exp(t1, t2)
            mij = gcd(Q.factors[i], Q.factors[j])
            # the value has order dividing mij; rewrite as a power of
            # zeta_mij
            assert (e * mij) % L == 0, "bicharacter order exceeds quotient"
            row.append((e * mij // L) % mij)
        matrix.append(row)
    return BrauerInvariant(Q.factors, matrix)


class InvariantProfile:
    def __init__(self, W):
        self.W = W
        C, cmats = graded_centralizer(W)
        self.centralizer = C
        self.centralizer_mats = cmats
        T, beta = commutation_bicharacter(C)
        self.T = T
        self.beta = beta
        self.Z = beta.radical()
        self.inertia = annihilator(self.Z)
        self.brauer = brauer_from_bicharacter(T, self.Z, beta)
        q = T.order // self.Z.order
        self.schur_index = isqrt(q)
        assert self.schur_index ** 2 == q, "|T/Z| is not a perfect square"

    def __repr__(self):
        return "InvariantProfile(|T|=%d, |Z|=%d, index=%d)" % (
            self.T.order, self.Z.order, self.schur_index)


def invariant_profile(W):
    return InvariantProfile(W)


def division_algebras_isomorphic(C1, C2):
    """Graded division algebras over the same group are isomorphic as
    graded algebras iff supports and commutation bicharacters agree."""
    T1, b1 = commutation_bicharacter(C1)
    T2, b2 = commutation_bicharacter(C2)
    if T1._set != T2._set:
        return False
    L = lcm(b1.L, b2.L)
    for s in T1.elements:
        for t in T1.elements:
            if b1.value_exp(s, t) * (L // b1.L) != \
               b2.value_exp(s, t) * (L // b2.L):
                return False
    return True


def inertia_by_twisting(V, seed=0):
    """The characters chi of the algebra's grading group with
    V^(alpha_chi) isomorphic to V through a homogeneous isomorphism of
    some degree."""
    out = []
    for chi in characters(V.algebra.group):
        tw = twist_by_automorphism(V, chi)
        for g in V.grading_group.elements():
            status, _ = find_isomorphism(tw, V, degree=g, seed=seed)
            if status == "iso":
                out.append(chi)
                break
    return out


# ---------------------------------------------------------------------------
# The simple module of a twisted group algebra with nondegenerate
# commutation bicharacter.

def simple_module_model(D, H, normalized):
    """The T/H-graded simple module of a graded division algebra D with
    basis labelled by T, relative to a maximal isotropic H carrying a
    normalized (multiplicative) basis.

    normalized is a dict h -> coordinate vector in D.  Returns
    (module, pi) with pi: T -> T/H.
    """
    T = D.group
    pi = QuotientMap(T, H if isinstance(H, Subgroup)
                     else Subgroup(T, H))
    order = D.order
    for v in normalized.values():
        for x in v:
            order = lcm(order, x.order)

    # basis b_t = c_{xi(tbar)} * c'_h for t = xi(tbar) h, multiplicative
    # on H by construction
    idx = {t: i for i, t in enumerate(D.labels)}
    bvec = {}
    for t in T.elements():
        tbar = pi.project(t)
        rep = pi.section(tbar)
        h = rep.inverse() * t
        bvec[t] = D.multiply(D.basis_vec(idx[rep]), normalized[h])

    def sigma(t1, t2):
        prod = D.multiply(bvec[t1], bvec[t2])
        tgt = bvec[t1 * t2]
        lam = None
        for a, b in zip(prod, tgt):
            if not b.is_zero():
                lam = a / b
                break
        assert lam is not None
        return lam

    Q = pi.target
    qelems = Q.elements()
    qidx = {q: i for i, q in enumerate(qelems)}
    n = len(qelems)

    # action of the new basis b_t, then converted to D's own basis
    def model_matrix(t1):
        m = ExactMatrix.zero(n, n, order)
        for col, q2 in enumerate(qelems):
            xi2 = pi.section(q2)
            q12 = pi.project(t1) * q2
            xi12 = pi.section(q12)
            h = t1 * xi2 * xi12.inverse()
            s = sigma(t1, xi2) * sigma(xi12, h).inverse()
            m.data[qidx[q12]][col] = s
        return m

    action = []
    for i, t in enumerate(D.labels):
        # express c_t through b_t: b_t = mu * c_t
        mu = None
        for a, b in zip(bvec[t], D.basis_vec(i)):
            if not b.is_zero():
                mu = a / b
                break
        assert mu is not None
        action.append(model_matrix(t).scale(mu.inverse()))
    M = GradedModule(D, qelems, action, Q, pi.project)
    return M, pi


def representation_bijective(M):
    """Is rho: D -> End(M) a linear bijection?"""
    D = M.algebra
    if D.dim != M.dim * M.dim:
        return False
    space = Subspace(M.dim * M.dim, M.order)
    for m in M.action:
        if not space.add(m.flatten()):
            return False
    return True


def element_from_operator(M, op):
    """rho^{-1}: find the algebra element acting as the given matrix."""
    cols = [m.flatten() for m in M.action]
    A = ExactMatrix(list(zip(*cols)))
    order = lcm(A.order, op.order)
    return A.solve([x.lift(order) for x in op.flatten()])


# ---------------------------------------------------------------------------
# Smash product models.

def smash_module(D, A, B, p):
    """The natural simple module of FA # FB for a pairing p(b, a):
    basis e_a for a in A, with (a, b) e_{a'} = p(b, a') e_{a a'}.

    Returns a GradedModule graded by A (as T/B for T = A x B)."""
    elems = A.elements()
    aidx = {a: i for i, a in enumerate(elems)}
    ka = len(A.factors)
    order = D.order
    action = []
    for t in D.labels:
        a = A.element(t.coords[:ka])
        b = B.element(t.coords[ka:])
        m = ExactMatrix.zero(len(elems), len(elems), order)
        for col, a2 in enumerate(elems):
            w = p(b, a2)
            m.data[aidx[a * a2]][col] = w.lift(order) \
                if w.order != order else w
        action.append(m)
    # graded by A, with algebra degree (a, b) projecting to a
    proj = lambda t: A.element(t.coords[:ka])
    return GradedModule(D, elems, action, A, proj)


def smash_dual_module(D, A, B, p):
    """The dual right module on basis f_b for b in B:
    f_b . (a', b') = p(b, a') f_{b' b}.  Returns the list of right
    action matrices indexed like D's basis."""
    elems = B.elements()
    bidx = {b: i for i, b in enumerate(elems)}
    ka = len(A.factors)
    order = D.order
    right = []
    for t in D.labels:
        a1 = A.element(t.coords[:ka])
        b1 = B.element(t.coords[ka:])
        m = ExactMatrix.zero(len(elems), len(elems), order)
        for col, b in enumerate(elems):
            w = p(b, a1)
            m.data[bidx[b1 * b]][col] = w.lift(order) \
                if w.order != order else w
        right.append(m)
    return right


def morita_element(M, x, f_vec, right_mats_basis_dim):
    """The algebra element corresponding to x (x) f under the Morita
    identification: the operator m -> f(m) x pulled back through rho."""
    n = M.dim
    order = M.order
    op = ExactMatrix.zero(n, n, order)
    for r in range(n):
        for c in range(n):
            op.data[r][c] = x[r] * f_vec[c]
    return element_from_operator(M, op)


# ---------------------------------------------------------------------------
# Grading the endomorphism algebra of a central image.

def grade_endomorphism_algebra(V, piZ):
    """The G/Z-grading on End(V) with components rho(R_gZ), for a
    central simple module V over a G-graded algebra R.

    Returns (algebra, mats, degs); asserts the components exhaust
    End(V)."""
    R = V.algebra
    order = V.order
    mats, degs = [], []
    total = Subspace(V.dim * V.dim, order)
    for q in piZ.target.elements():
        sub = Subspace(V.dim * V.dim, order)
        chosen = []
        for b in range(R.dim):
            if piZ.project(R.degrees[b]) != q:
                continue
            if sub.add(V.action[b].flatten()):
                chosen.append(V.action[b])
        for m in chosen:
            grew = total.add(m.flatten())
            assert grew, "components of End(V) overlap"
            mats.append(m)
            degs.append(q)
    assert total.dim == V.dim * V.dim, "components do not span End(V)"
    return matrices_to_algebra(piZ.target, mats, degs, order) + (degs,)
