"""Graded modules over graded algebras, with exact decision procedures.

A module is a list of action matrices, one per algebra basis element,
acting on column vectors, together with a degree for each module basis
vector.  The grading group of the module may be a quotient of the
algebra's group; proj maps algebra degrees into it.

Morphisms compose left to right: endomorphisms of left modules are
written on the right, so the matrix of f followed by g is mat(g) @
mat(f).
"""

import random

from .abgroup import dual_generators
from .cyclo import CycScalar, lcm
from .galg import GradedAlgebra, radical_via_trace, span_closure
from .linalg import ExactMatrix, Subspace


class GradedModule:
    def __init__(self, algebra, degrees, action, grading_group=None,
                 proj=None):
        self.algebra = algebra
        self.grading_group = grading_group or algebra.group
        self.proj = proj or (lambda g: g)
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        order = algebra.order
        for m in action:
            order = lcm(order, m.order)
        self.order = order
        self.action = [ExactMatrix(m.data, order) if m.order != order else m
                       for m in action]
        assert len(self.action) == algebra.dim

    def component_indices(self, h):
        return [i for i, d in enumerate(self.degrees) if d == h]

    def act_matrix(self, r):
        """Matrix of the action of an algebra element (coordinate vec)."""
        out = ExactMatrix.zero(self.dim, self.dim, self.order)
        for b, c in enumerate(r):
            if not c.is_zero():
                out = out + self.action[b].scale(c)
        return out

    def act(self, r, v):
        return self.act_matrix(r).apply(v)

    def support(self):
        return sorted({d for d in self.degrees}, key=lambda g: g.coords)

    def validate(self):
        """List of violations of the module axioms (empty when valid)."""
        bad = []
        A = self.algebra
        if not self.act_matrix(A.unit) == ExactMatrix.identity(self.dim,
                                                               self.order):
            bad.append("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = A.multiply(A.basis_vec(i), A.basis_vec(j))
                if self.action[i] @ self.action[j] != self.act_matrix(prod):
                    bad.append("action not multiplicative at (%d,%d)"
                               % (i, j))
        for b in range(A.dim):
            g = self.proj(A.degrees[b])
            m = self.action[b]
            for r in range(self.dim):
                for c in range(self.dim):
                    if not m.data[r][c].is_zero() and \
                       self.degrees[r] != g * self.degrees[c]:
                        bad.append(
                            "action of basis %d violates the grading "
                            "at entry (%d,%d)" % (b, r, c))
        return bad

    def shift(self, g):
        """Same action, degree of every vector multiplied by g."""
        return GradedModule(self.algebra, [d * g for d in self.degrees],
                            self.action, self.grading_group, self.proj)

    def forget_to(self, group, proj):
        """Push the grading through a projection of the grading group."""
        return GradedModule(self.algebra,
                            [proj(d) for d in self.degrees],
                            self.action, group,
                            lambda g, _p=self.proj: proj(_p(g)))

    def __repr__(self):
        return "GradedModule(dim %d over %r)" % (self.dim, self.grading_group)


class GradedMap:
    """A homogeneous linear map between graded modules, with a declared
    degree; matrix acts on column vectors."""

    def __init__(self, source, target, matrix, degree):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.degree = degree

    def is_graded(self):
        m = self.matrix
        for r in range(m.rows):
            for c in range(m.cols):
                if not m.data[r][c].is_zero() and \
                   self.target.degrees[r] != self.degree * \
                   self.source.degrees[c]:
                    return False
        return True

    def is_module_map(self):
        for b in range(self.source.algebra.dim):
            if self.matrix @ self.source.action[b] != \
               self.target.action[b] @ self.matrix:
                return False
        return True

    def then(self, other):
        """Left-to-right composition: self followed by other."""
        assert self.target is other.source or \
            self.target.dim == other.source.dim
        return GradedMap(self.source, other.target,
                         other.matrix @ self.matrix,
                         self.degree * other.degree)

    def is_invertible(self):
        return self.matrix.is_invertible()


# ---------------------------------------------------------------------------
# Commutant solving.

def commutant_within(basis, mats):
    """Shrink a spanning set of matrices to the subspace commuting with
    every matrix in mats."""
    for a in mats:
        if not basis:
            break
        cols = []
        for f in basis:
            d = f @ a - a @ f
            cols.append(d.flatten())
        K = ExactMatrix(list(zip(*cols)))
        ker = K.kernel()
        newbasis = []
        for v in ker:
            m = basis[0].scale(v[0])
            for c, b in zip(v[1:], basis[1:]):
                m = m + b.scale(c)
            newbasis.append(m)
        basis = newbasis
    return basis


def constrained_commutant(mats, dim, pairs=None, order=1):
    """Matrices commuting with every matrix in mats, supported on the
    given (row, col) entry pairs (all entries when pairs is None)."""
    for m in mats:
        order = lcm(order, m.order)
    if pairs is None:
        pairs = [(r, c) for r in range(dim) for c in range(dim)]
    if not pairs:
        return []
    basis = []
    for (r, c) in pairs:
        m = ExactMatrix.zero(dim, dim, order)
        m.data[r][c] = CycScalar.one(order)
        basis.append(m)
    return commutant_within(basis, mats)


def graded_centralizer_components(W):
    """Dict h -> list of matrices: the degree-h component of the graded
    centralizer of W."""
    out = {}
    for h in W.grading_group.elements():
        pairs = [(r, c) for r in range(W.dim) for c in range(W.dim)
                 if W.degrees[r] == h * W.degrees[c]]
        comp = constrained_commutant(W.action, W.dim, pairs, W.order)
        if comp:
            out[h] = comp
    return out


def matrices_to_algebra(group, mats, degs, order=1, compose="matrix"):
    """Wrap a multiplicatively closed list of matrices as a
    GradedAlgebra.

    compose="matrix" multiplies as matrices (left actions);
    compose="right" composes left to right, the convention for
    centralizers written on the right.  Returns (algebra, matrices);
    the identity matrix must lie in the span.
    """
    for m in mats:
        order = lcm(order, m.order)
    n = mats[0].rows
    space = Subspace(n * n, order)
    for m in mats:
        grew = space.add(m.flatten())
        assert grew, "matrices must be linearly independent"
    mult = {}
    for i in range(len(mats)):
        for j in range(len(mats)):
            prod = (mats[j] @ mats[i]) if compose == "right" \
                else (mats[i] @ mats[j])
            coords = space.coords_raw(prod.flatten())
            assert coords is not None, "matrices are not closed"
            mult[(i, j)] = {k: c for k, c in enumerate(coords)
                            if not c.is_zero()}
    unit = space.coords_raw(ExactMatrix.identity(n, order).flatten())
    assert unit is not None, "identity not in span"
    return GradedAlgebra(group, degs, mult, unit, space.order), mats


def graded_centralizer(W):
    """The graded centralizer as (GradedAlgebra, matrices), composition
    left to right."""
    comps = graded_centralizer_components(W)
    mats, degs = [], []
    for h in W.grading_group.elements():
        for m in comps.get(h, []):
            mats.append(m)
            degs.append(h)
    return matrices_to_algebra(W.grading_group, mats, degs, W.order,
                               compose="right")


# ---------------------------------------------------------------------------
# Simplicity.

def character_diagonal(W, chi):
    """The operator scaling each W_g by chi(g)."""
    order = lcm(W.order, W.grading_group.exponent)
    m = ExactMatrix.zero(W.dim, W.dim, order)
    for i, d in enumerate(W.degrees):
        m.data[i][i] = chi.value(d, order)
    return m


def _enveloping_basis(W, with_diagonals):
    mats = list(W.action)
    if with_diagonals:
        for chi in dual_generators(W.grading_group):
            mats.append(character_diagonal(W, chi))
    return span_closure(mats)


def _singular_submodule_witness(B, commutant, dim, order):
    """Try to exhibit a proper nonzero invariant subspace from a
    singular non-scalar element of the commutant."""
    candidates = list(commutant)
    for i in range(len(commutant)):
        for j in range(i + 1, len(commutant)):
            candidates.append(commutant[i] + commutant[j])
            candidates.append(commutant[i] - commutant[j])
    ident = ExactMatrix.identity(dim, order)
    shifts = [CycScalar.rational(q) for q in (1, -1, 2, -2)]
    from .cyclo import QQ
    shifts += [CycScalar.rational(QQ(1, 2)), CycScalar.rational(QQ(-1, 2))]
    N = max(order, 2)
    shifts += [CycScalar.zeta(N, k) for k in range(1, N)]
    extra = []
    for u in commutant:
        for lam in shifts:
            extra.append(u - ident.scale(lam))
    for u in candidates + extra:
        if u.is_zero():
            continue
        ker = u.kernel()
        if 0 < len(ker) < dim:
            return ker
    return None


def _simplicity(W, with_diagonals):
    B = _enveloping_basis(W, with_diagonals)
    if len(B) == W.dim * W.dim:
        # the enveloping algebra is all of End(W): no proper invariant
        # subspace, scalar commutant
        return True, None
    rad = radical_via_trace(B)
    order = B[0].order
    if rad:
        # rad * W is a proper nonzero invariant subspace
        sub = Subspace(W.dim, order)
        for x in rad:
            for col in x.columns():
                sub.add(col)
        assert 0 < sub.dim < W.dim
        return False, sub.basis()
    comm = constrained_commutant(B, W.dim, None, order)
    if len(comm) == 1:
        return True, None
    witness = _singular_submodule_witness(B, comm, W.dim, order)
    if witness is not None:
        return False, witness
    return None, None


def is_graded_simple(W):
    """Three-valued: (True, None), (False, submodule basis), or
    (None, None) when the certificate is inconclusive."""
    return _simplicity(W, with_diagonals=True)


def is_simple_ungraded(W):
    return _simplicity(W, with_diagonals=False)


def is_central(W):
    """End over the plain action is just the scalars."""
    comm = constrained_commutant(W.action, W.dim, None, W.order)
    return len(comm) == 1


# ---------------------------------------------------------------------------
# Intertwiners and isomorphism.

def intertwiners(V, W, degree=None):
    """Basis of module maps V -> W; homogeneous of the given degree when
    one is supplied (None means no degree constraint)."""
    assert V.algebra is W.algebra or V.algebra.dim == W.algebra.dim
    order = lcm(V.order, W.order)
    if degree is not None:
        pairs = [(r, c) for r in range(W.dim) for c in range(V.dim)
                 if W.degrees[r] == degree * V.degrees[c]]
    else:
        pairs = [(r, c) for r in range(W.dim) for c in range(V.dim)]
    if not pairs:
        return []
    basis = []
    for (r, c) in pairs:
        m = ExactMatrix.zero(W.dim, V.dim, order)
        m.data[r][c] = CycScalar.one(order)
        basis.append(m)
    for b in range(V.algebra.dim):
        if not basis:
            break
        cols = []
        for f in basis:
            d = f @ V.action[b] - W.action[b] @ f
            cols.append(d.flatten())
        K = ExactMatrix(list(zip(*cols)))
        ker = K.kernel()
        basis = [_combine(basis, v) for v in ker]
    return basis


def _combine(mats, coeffs):
    out = mats[0].scale(coeffs[0])
    for c, m in zip(coeffs[1:], mats[1:]):
        out = out + m.scale(c)
    return out


def find_isomorphism(V, W, degree=None, seed=0, tries=200):
    """Search for an invertible intertwiner.

    Returns (status, matrix) with status in "iso", "no", "inconclusive".
    """
    if V.dim != W.dim:
        return "no", None
    hom = intertwiners(V, W, degree)
    if not hom:
        return "no", None
    for f in hom:
        if f.is_invertible():
            return "iso", f
    if len(hom) == 1:
        # Schur: a single-dim hom space with singular element and a
        # simple source cannot contain an isomorphism
        return "no", None
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [CycScalar.rational(rng.randint(-3, 3), hom[0].order)
                  for _ in hom]
        f = _combine(hom, coeffs)
        if f.is_invertible():
            return "iso", f
    return "inconclusive", None


# ---------------------------------------------------------------------------
# Spinning and density.

def spin(W, v):
    """The submodule generated by a vector, as a Subspace."""
    sub = Subspace(W.dim, W.order)
    sub.add(v)
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for m in W.action:
                y = m.apply(x)
                if sub.add(y):
                    nxt.append(y)
        frontier = nxt
    return sub


def centralizer_independent(W, vs):
    """Are the vectors independent over the (ungraded) centralizer?"""
    comm = constrained_commutant(W.action, W.dim, None, W.order)
    cols = []
    for v in vs:
        for c in comm:
            cols.append(c.apply(v))
    if not cols:
        return True
    A = ExactMatrix(list(zip(*cols)))
    return len(A.kernel()) == 0


def solve_density(W, vs, ws):
    """Find an algebra element r with r v_i = w_i for all i, or None.

    When the v_i are independent over the centralizer and the module is
    a finite direct sum of simples, density guarantees a solution.
    """
    assert len(vs) == len(ws)
    cols = []
    for b in range(W.algebra.dim):
        col = []
        for v in vs:
            col.extend(W.action[b].apply(v))
        cols.append(col)
    rhs = []
    for w in ws:
        rhs.extend(w)
    A = ExactMatrix(list(zip(*cols)))
    order = lcm(A.order, max(x.order for x in rhs) if rhs else 1)
    return A.solve([x.lift(order) for x in rhs])
