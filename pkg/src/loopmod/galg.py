"""Algebras graded by finite abelian groups, given by structure constants.

An algebra here is a basis with a degree map and a sparse table of
structure constants over a cyclotomic field.  Twisted group algebras and
smash products are the main constructors; the analysis tools (trace
radical, center, graded subfield normalization, central idempotents) all
work with exact linear algebra.
"""

from math import gcd

from .abgroup import FinAbGroup, Subgroup, abelian_basis, direct_product, \
    subgroup_characters
from .cyclo import CycScalar, FieldNotSplit, lcm, scalar_root
from .linalg import ExactMatrix, Subspace, vec_add, vec_is_zero, vec_scale


class GradedAlgebra:
    """Finite dimensional algebra with homogeneous basis.

    mult[(i, j)] is a dict {k: c} meaning x_i x_j = sum_k c * x_k;
    missing entries are zero.  labels, when present, name the basis
    elements (group elements for twisted group algebras).
    """

    def __init__(self, group, degrees, mult, unit, order=1, labels=None):
        self.group = group
        self.degrees = list(degrees)
        self.dim = len(self.degrees)
        self.order = order
        self.mult = {}
        for (i, j), terms in mult.items():
            clean = {k: (c.lift(order) if c.order != order else c)
                     for k, c in terms.items() if not c.is_zero()}
            if clean:
                self.mult[(i, j)] = clean
        self.unit = [x.lift(order) if x.order != order else x for x in unit]
        self.labels = labels

    # -- element helpers

    def zero_vec(self):
        return [CycScalar.zero(self.order)] * self.dim

    def basis_vec(self, i):
        v = self.zero_vec()
        v[i] = CycScalar.one(self.order)
        return v

    def multiply(self, x, y):
        out = self.zero_vec()
        for i, a in enumerate(x):
            if a.is_zero():
                continue
            for j, b in enumerate(y):
                if b.is_zero():
                    continue
                terms = self.mult.get((i, j))
                if terms:
                    ab = a * b
                    for k, c in terms.items():
                        out[k] = out[k] + ab * c
        return out

    def power(self, x, n):
        out = list(self.unit)
        for _ in range(n):
            out = self.multiply(out, x)
        return out

    def component_indices(self, g):
        return [i for i, d in enumerate(self.degrees) if d == g]

    def support(self):
        return Subgroup(self.group, set(self.degrees))

    def degree_of_vec(self, x):
        """Degree of a homogeneous vector, or None if mixed/zero."""
        degs = {self.degrees[i] for i, c in enumerate(x) if not c.is_zero()}
        return degs.pop() if len(degs) == 1 else None

    # -- validation

    def validate(self):
        """Return a list of violation descriptions (empty when valid)."""
        bad = []
        # grading compatibility of the structure constants
        for (i, j), terms in self.mult.items():
            dij = self.degrees[i] * self.degrees[j]
            for k in terms:
                if self.degrees[k] != dij:
                    bad.append("grading: x%d x%d hits x%d of wrong degree"
                               % (i, j, k))
        # two-sided unit
        for i in range(self.dim):
            b = self.basis_vec(i)
            if self.multiply(self.unit, b) != b or \
               self.multiply(b, self.unit) != b:
                bad.append("unit fails on basis element %d" % i)
        # associativity on basis triples
        for i in range(self.dim):
            bi = self.basis_vec(i)
            for j in range(self.dim):
                bj = self.basis_vec(j)
                ij = self.multiply(bi, bj)
                for k in range(self.dim):
                    bk = self.basis_vec(k)
                    lhs = self.multiply(ij, bk)
                    rhs = self.multiply(bi, self.multiply(bj, bk))
                    if lhs != rhs:
                        bad.append("associativity fails at (%d,%d,%d)"
                                   % (i, j, k))
        return bad

    def inverse_of(self, x):
        """Two-sided inverse of an element, or None."""
        cols = []
        for j in range(self.dim):
            cols.append(self.multiply(x, self.basis_vec(j)))
        A = ExactMatrix(list(zip(*cols)))
        y = A.solve(self.unit)
        if y is None:
            return None
        if self.multiply(y, x) != self.unit:
            return None
        return y

    def is_graded_division(self):
        """Every nonzero homogeneous basis element is invertible."""
        return all(self.inverse_of(self.basis_vec(i)) is not None
                   for i in range(self.dim))

    def left_mult_matrix(self, x):
        cols = [self.multiply(x, self.basis_vec(j)) for j in range(self.dim)]
        return ExactMatrix(list(zip(*cols)))

    def __repr__(self):
        return "GradedAlgebra(dim %d over %r, Q(zeta_%d))" % (
            self.dim, self.group, self.order)


# ---------------------------------------------------------------------------
# Cocycles and twisted group algebras.

class Cocycle:
    """Normalized 2-cocycle on a finite abelian group with values in the
    roots of unity / nonzero cyclotomic scalars."""

    def __init__(self, group, table, order=1):
        self.group = group
        self.order = order
        self.table = {k: (v.lift(order) if v.order != order else v)
                      for k, v in table.items()}

    @staticmethod
    def trivial(G, order=1):
        one = CycScalar.one(order)
        return Cocycle(G, {(a, b): one for a in G.elements()
                           for b in G.elements()}, order)

    @staticmethod
    def from_alternating_matrix(G, M):
        """Bimultiplicative cocycle whose commutation bicharacter is the
        alternating bicharacter given by the antisymmetric exponent
        matrix M (entries against the cyclic generators)."""
        L = G.exponent
        k = len(G.factors)
        table = {}
        for a in G.elements():
            for b in G.elements():
                e = 0
                for i in range(k):
                    for j in range(i + 1, k):
                        gij = gcd(G.factors[i], G.factors[j])
                        e += a.coords[i] * b.coords[j] * M[i][j] * (L // gij)
                table[(a, b)] = CycScalar.zeta(L, e % L) if L > 1 \
                    else CycScalar.one()
        return Cocycle(G, table, max(L, 1))

    def value(self, a, b):
        return self.table[(a, b)]

    def is_normalized(self):
        e = self.group.identity
        one = CycScalar.one(self.order)
        return all(self.table[(e, g)] == one and self.table[(g, e)] == one
                   for g in self.group.elements())

    def validate(self):
        """Check the 2-cocycle identity on all triples."""
        for a in self.group.elements():
            for b in self.group.elements():
                ab = a * b
                for c in self.group.elements():
                    lhs = self.table[(a, b)] * self.table[(ab, c)]
                    rhs = self.table[(b, c)] * self.table[(a, b * c)]
                    if lhs != rhs:
                        return False
        return True


def twisted_group_algebra(T, sigma, order=None):
    """F^sigma T: basis c_t indexed by T with c_s c_t = sigma(s,t) c_st."""
    elems = T.elements()
    idx = {t: i for i, t in enumerate(elems)}
    order = order or max(sigma.order, 1)
    mult = {}
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            mult[(i, j)] = {idx[s * t]: sigma.value(s, t)}
    unit = [CycScalar.zero(order)] * len(elems)
    unit[idx[T.identity]] = CycScalar.one(order)
    return GradedAlgebra(T, elems, mult, unit, order, labels=list(elems))


def group_algebra(T, order=None):
    return twisted_group_algebra(T, Cocycle.trivial(T), order)


def smash_product(A, B, beta_fn, order=1):
    """FA # FB for a pairing beta: the product group A x B with
    (a1,b1)(a2,b2) = beta(b1, a2) (a1 a2, b1 b2).

    beta_fn takes (b in B, a in A) and returns a CycScalar.
    """
    G, e1, e2 = direct_product(A, B)
    elems = G.elements()
    idx = {t: i for i, t in enumerate(elems)}
    ka = len(A.factors)

    def parts(g):
        return (A.element(g.coords[:ka]), B.element(g.coords[ka:]))

    mult = {}
    for i, s in enumerate(elems):
        for j, t in enumerate(elems):
            a1, b1 = parts(s)
            a2, b2 = parts(t)
            c = beta_fn(b1, a2)
            order = lcm(order, c.order)
            mult[(i, j)] = {idx[s * t]: c}
    unit = [CycScalar.zero(order)] * len(elems)
    unit[idx[G.identity]] = CycScalar.one(order)
    return GradedAlgebra(G, elems, mult, unit, order, labels=list(elems))


# ---------------------------------------------------------------------------
# Matrix algebra analysis.

def span_closure(mats, include_identity=True):
    """Basis of the unital algebra of matrices generated by mats."""
    assert mats
    n = mats[0].rows
    order = 1
    for m in mats:
        order = lcm(order, m.order)
    space = Subspace(n * n, order)
    basis = []

    def push(m):
        if space.add(m.flatten()):
            basis.append(m)
            return True
        return False

    full = n * n
    if include_identity:
        push(ExactMatrix.identity(n, order))
    frontier = []
    for m in mats:
        if push(m):
            frontier.append(m)
    while frontier and space.dim < full:
        nxt = []
        for f in frontier:
            for b in list(basis):
                for prod in (f @ b, b @ f):
                    if push(prod):
                        nxt.append(prod)
                if space.dim == full:
                    return basis
        frontier = nxt
    return basis


def trace(mat):
    out = CycScalar.zero(mat.order)
    for i in range(mat.rows):
        out = out + mat.data[i][i]
    return out


def trace_product(a, b):
    """tr(ab) without forming the product matrix."""
    out = CycScalar.zero(max(a.order, b.order))
    for i in range(a.rows):
        for j in range(a.cols):
            x = a.data[i][j]
            if not x.is_zero():
                y = b.data[j][i]
                if not y.is_zero():
                    out = out + x * y
    return out


def radical_via_trace(basis):
    """Radical of a matrix algebra in characteristic zero: the kernel of
    the trace form tr(xy) on a spanning set.  Returns matrices."""
    if not basis:
        return []
    n = len(basis)
    gram = ExactMatrix([[trace_product(basis[i], basis[j])
                         for j in range(n)] for i in range(n)])
    out = []
    for v in gram.kernel():
        m = basis[0].scale(v[0])
        for c, b in zip(v[1:], basis[1:]):
            m = m + b.scale(c)
        out.append(m)
    return out


def center_of(A):
    """Homogeneous basis of the center: list of (vector, degree)."""
    n = A.dim
    # z x_i = x_i z for all i, as linear conditions on z
    rows = []
    for i in range(n):
        b = A.basis_vec(i)
        for k in range(n):
            row = []
            for j in range(n):
                lhs = A.mult.get((j, i), {}).get(k, None)
                rhs = A.mult.get((i, j), {}).get(k, None)
                l = lhs if lhs is not None else CycScalar.zero(A.order)
                r = rhs if rhs is not None else CycScalar.zero(A.order)
                row.append(l - r)
            rows.append(row)
    ker = ExactMatrix(rows, A.order).kernel() if rows else \
        [A.basis_vec(i) for i in range(n)]
    # split each central element into homogeneous parts; the parts are
    # central too since commuting is a degree-wise condition
    space = Subspace(n, A.order)
    out = []
    for v in ker:
        for g in sorted({A.degrees[i] for i, c in enumerate(v)
                         if not c.is_zero()}, key=lambda g: g.coords):
            part = [c if A.degrees[i] == g else CycScalar.zero(A.order)
                    for i, c in enumerate(v)]
            if space.add(part):
                out.append((part, g))
    return out


def central_support(A):
    return Subgroup(A.group, [g for _, g in center_of(A)])


def normalize_graded_field(multiply, unit, vec_of, H, order):
    """Rescale spanning vectors of a commutative graded subfield with
    support H and one dimensional components so that c_h1 c_h2 = c_h1h2.

    multiply/unit describe the ambient algebra; vec_of maps h in H to a
    spanning vector of the h-component.  May enlarge the cyclotomic
    order; raises FieldNotSplit when a required root does not exist.
    Returns a dict h -> vector.
    """
    basis = abelian_basis(H)
    units = []
    for g, m in basis:
        v = vec_of(g)
        p = list(v)
        for _ in range(m - 1):
            p = multiply(p, v)
        # p must be a scalar multiple of the unit
        mu = None
        for a, b in zip(p, unit):
            if not b.is_zero():
                mu = a / b
                break
        assert mu is not None
        for a, b in zip(p, unit):
            if a != mu * b:
                raise FieldNotSplit("power of homogeneous element is not "
                                    "a multiple of the unit")
        r = scalar_root(mu, m)
        units.append(vec_scale(r.inverse(), v))
    # decompose H against the basis and take ordered products
    out = {}
    for coords in _coord_tuples(basis):
        h = H.group.identity
        c = list(unit)
        for a, (g, _), u in zip(coords, basis, units):
            h = h * g ** a
            for _ in range(a):
                c = multiply(c, u)
        out[h] = c
    assert len(out) == H.order
    return out


def _coord_tuples(basis):
    from itertools import product
    return product(*[range(m) for _, m in basis])


def normalize_subfield_basis(A, H):
    """Multiplicative basis c_h of the graded subfield sum of A_h, h in H.

    Requires each A_h (h in H) to be one dimensional and the subfield to
    be commutative.
    """
    vecs = {}
    for h in H.elements:
        idxs = A.component_indices(h)
        if len(idxs) != 1:
            raise FieldNotSplit(
                "component of degree %r is not one dimensional" % (h,))
        vecs[h] = A.basis_vec(idxs[0])
    for h1 in H.elements:
        for h2 in H.elements:
            if A.multiply(vecs[h1], vecs[h2]) != \
               A.multiply(vecs[h2], vecs[h1]):
                raise ValueError("subfield candidate is not commutative")
    return normalize_graded_field(A.multiply, A.unit, lambda h: vecs[h],
                                  H, A.order)


def primitive_central_idempotents(A):
    """The idempotents eps_chi = (1/|Z|) sum_z chi(z)^{-1} c_z, where c_z
    is a normalized basis of the (graded) center with support Z."""
    cent = center_of(A)
    Z = Subgroup(A.group, [g for _, g in cent])
    assert len(cent) == Z.order, "center has a component of dim > 1"
    comp = {g: v for v, g in cent}
    c = normalize_graded_field(A.multiply, A.unit, lambda z: comp[z],
                               Z, A.order)
    out = []
    from .cyclo import QQ
    inv_n = CycScalar.rational(QQ(1, Z.order))
    for chi in subgroup_characters(Z):
        eps = [CycScalar.zero(A.order)] * len(A.unit)
        for z in Z.elements:
            w = chi.value(z).inverse()
            eps = vec_add(eps, vec_scale(w, c[z]))
        out.append(vec_scale(inv_n, eps))
    return out
