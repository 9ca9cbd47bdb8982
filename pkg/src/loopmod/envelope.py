"""From an ungraded simple module to a graded simple one containing it.

Pipeline: compute the inertia subgroup K of characters chi whose
automorphism twist leaves the module isomorphic to itself (with witness
intertwiners), grade End(V) by G/Z for Z = the joint kernel of K via
simultaneous conjugation eigenspaces, split the graded matrix algebra
into a minimal graded left ideal and its endomorphism division algebra,
and induce back up to a G-graded simple module W with V embedded.
"""

from .abgroup import QuotientMap, characters, joint_kernel
from .central import twist_by_automorphism
from .cyclo import CycScalar, lcm
from .gmod import GradedModule, GradedMap, find_isomorphism, \
    graded_centralizer, intertwiners, is_graded_simple, is_simple_ungraded, \
    matrices_to_algebra
from .linalg import ExactMatrix, Subspace
from .loopfun import induce


def inertia_of_simple(V, require_simple=True):
    """The characters chi of the algebra's grading group whose twist
    V^(alpha_chi) is isomorphic to V, with witness intertwiners.

    Returns (chars, witnesses) with witnesses[chi] an invertible f
    satisfying f rho(r) f^{-1} = chi(deg r) rho(r).
    """
    if require_simple:
        verdict, _ = is_simple_ungraded(V)
        assert verdict is True, "module is not certified simple"
    G = V.algebra.group
    chars = []
    witnesses = {}
    for chi in characters(G):
        tw = twist_by_automorphism(V, chi)
        hom = intertwiners(V, tw, degree=None)
        if not hom:
            continue
        f = hom[0]
        # Schur: a nonzero map out of a simple module is injective
        assert f.is_invertible()
        chars.append(chi)
        witnesses[chi] = f
    return chars, witnesses


def _twisted_commutant(basis, f, lam):
    """Shrink a matrix space to {u : f u = lam * u f}."""
    cols = []
    for u in basis:
        d = f @ u - (u @ f).scale(lam)
        cols.append(d.flatten())
    K = ExactMatrix(list(zip(*cols)))
    ker = K.kernel()
    out = []
    for v in ker:
        m = basis[0].scale(v[0])
        for c, b in zip(v[1:], basis[1:]):
            m = m + b.scale(c)
        out.append(m)
    return out


def grade_by_inertia(V, chars, witnesses):
    """The G/Z-grading on End(V) cut out by conjugation with the
    witnesses: the degree-gZ component is the joint eigenspace with
    eigenvalue chi(g) under Ad of each witness.

    Returns (algebra, mats, piZ); asserts the components exhaust End(V)
    and that the action of each algebra basis element lands in the
    component of its own degree.
    """
    G = V.algebra.group
    Z = joint_kernel(G, chars)
    piZ = QuotientMap(G, Z)
    order = lcm(V.order, max(G.exponent, 1))
    for f in witnesses.values():
        order = lcm(order, f.order)
    n = V.dim
    mats, degs = [], []
    for q in piZ.target.elements():
        g = piZ.section(q)
        basis = []
        for r in range(n):
            for c in range(n):
                m = ExactMatrix.zero(n, n, order)
                m.data[r][c] = CycScalar.one(order)
                basis.append(m)
        for chi in chars:
            if not basis:
                break
            basis = _twisted_commutant(basis, witnesses[chi],
                                       chi.value(g, order))
        for m in basis:
            mats.append(m)
            degs.append(q)
    assert len(mats) == n * n, "eigenspaces do not exhaust End(V)"
    # the representation is degree compatible
    for b in range(V.algebra.dim):
        g = V.algebra.degrees[b]
        for chi in chars:
            f = witnesses[chi]
            lam = chi.value(g, order)
            assert f @ V.action[b] == (V.action[b] @ f).scale(lam), \
                "action is not homogeneous for the inertia grading"
    alg, _ = matrices_to_algebra(piZ.target, mats, degs, order)
    return alg, mats, piZ


# ---------------------------------------------------------------------------
# Graded Wedderburn splitting.

def _left_ideal(A, vec, order):
    sub = Subspace(A.dim, order)
    for i in range(A.dim):
        sub.add(A.multiply(A.basis_vec(i), vec))
    return sub


def _homogeneous_parts(A, v):
    """Split a vector of A into its nonzero homogeneous components."""
    bydeg = {}
    for i, c in enumerate(v):
        if not c.is_zero():
            bydeg.setdefault(A.degrees[i], []).append(i)
    out = []
    for d, idxs in bydeg.items():
        w = [CycScalar.zero(x.order) for x in v]
        for i in idxs:
            w[i] = v[i]
        out.append((d, w))
    return out


def minimal_graded_left_ideal(A):
    """A minimal graded left ideal, found by spinning homogeneous
    elements and refining until no homogeneous member spins a strictly
    smaller nonzero ideal."""
    order = A.order
    seeds = sorted(range(A.dim),
                   key=lambda i: A.left_mult_matrix(A.basis_vec(i)).rank())
    best = _left_ideal(A, A.basis_vec(seeds[0]), order)
    for i in seeds[1:]:
        sub = _left_ideal(A, A.basis_vec(i), order)
        if 0 < sub.dim < best.dim:
            best = sub
    changed = True
    while changed:
        changed = False
        for v in best.basis():
            for _, w in _homogeneous_parts(A, v):
                sub = _left_ideal(A, w, order)
                if 0 < sub.dim < best.dim:
                    best = sub
                    changed = True
                    break
            if changed:
                break
    return best


def graded_wedderburn_split(A):
    """Split a graded simple algebra: a minimal graded left ideal Wp as
    a graded module over A, and its graded division centralizer Dp.

    Returns (Wp, Dp, dmats); asserts the action is faithful and the
    dimension count dim A = (dim Wp)^2 / dim Dp.
    """
    ideal = minimal_graded_left_ideal(A)
    order = ideal.order
    # homogeneous basis: the ideal is graded, so the homogeneous parts
    # of its basis vectors stay inside and re-span it
    sub = Subspace(A.dim, order)
    hbasis, degs = [], []
    for v in ideal.basis():
        for d, w in _homogeneous_parts(A, v):
            if sub.add(w):
                hbasis.append(w)
                degs.append(d)
    assert sub.dim == ideal.dim
    action = []
    for i in range(A.dim):
        m = ExactMatrix.zero(len(hbasis), len(hbasis), order)
        for j, w in enumerate(hbasis):
            prod = A.multiply(A.basis_vec(i), w)
            coords = sub.coords_raw([x.lift(order) for x in prod])
            assert coords is not None
            for k, c in enumerate(coords):
                if not c.is_zero():
                    m.data[k][j] = c
        action.append(m)
    Wp = GradedModule(A, degs, action, A.group, lambda g: g)
    Wp.ideal_basis = hbasis
    Dp, dmats = graded_centralizer(Wp)
    assert Dp.is_graded_division(), "splitting centralizer is not division"
    assert A.dim * Dp.dim == Wp.dim * Wp.dim, "dimension count fails"
    # faithful action
    span = Subspace(Wp.dim * Wp.dim, Wp.order)
    for m in Wp.action:
        grew = span.add(m.flatten())
        assert grew, "the split action is not faithful"
    return Wp, Dp, dmats


# ---------------------------------------------------------------------------
# The full pipeline.

class EnvelopeResult:
    def __init__(self, V, inertia, witnesses, piZ, graded_end, end_mats,
                 Wprime, Dprime, W, embed):
        self.V = V
        self.inertia = inertia          # list of characters K
        self.witnesses = witnesses      # chi -> intertwiner matrix
        self.Z = piZ.kernel
        self.piZ = piZ
        self.graded_end = graded_end    # End(V) as a G/Z-graded algebra
        self.end_mats = end_mats
        self.Wprime = Wprime            # G/Z-graded simple over the algebra
        self.Dprime = Dprime
        self.W = W                      # G-graded simple module
        self.embed = embed              # injective matrix V -> W

    def __repr__(self):
        return "EnvelopeResult(dim V=%d, dim W=%d, |K|=%d)" % (
            self.V.dim, self.W.dim, len(self.inertia))


def graded_envelope(V):
    """Produce a graded simple module W containing the simple module V,
    together with all intermediate data."""
    chars, witnesses = inertia_of_simple(V)
    E, emats, piZ = grade_by_inertia(V, chars, witnesses)
    WpE, Dp, _ = graded_wedderburn_split(E)

    # pull the ideal module back along rho: R -> End(V)
    R = V.algebra
    order = WpE.order
    for m in emats:
        order = lcm(order, m.order)
    espace = Subspace(V.dim * V.dim, order)
    for m in emats:
        espace.add(m.flatten())
    action = []
    for b in range(R.dim):
        coords = espace.coords_raw(
            [x.lift(order) for x in V.action[b].flatten()])
        assert coords is not None, "representation is not onto End(V)"
        action.append(WpE.act_matrix(coords))
    Wp = GradedModule(R, list(WpE.degrees), action, piZ.target,
                      piZ.project)

    W = induce(Wp, piZ).module
    verdict, _ = is_graded_simple(W)
    assert verdict is True, "induced module is not certified graded simple"
    assert W.dim == Wp.dim * piZ.kernel.order

    hom = intertwiners(V, W, degree=None)
    assert hom, "no embedding of V into W"
    embed = hom[0]
    assert embed.rank() == V.dim, "embedding is not injective"
    return EnvelopeResult(V, chars, witnesses, piZ, E, emats, Wp, Dp, W,
                          embed)
