"""Finite abelian groups as explicit products of cyclic factors.

Provides group elements, fully enumerated subgroups, quotient maps with
deterministic sections, characters (of the group and of subgroups), and
bicharacters with isotropic subgroup enumeration.  Everything is small
and exhaustive by design; groups here have at most a few hundred
elements.
"""

from itertools import product
from math import gcd

from .cyclo import CycScalar, lcm


# ---------------------------------------------------------------------------
# Integer matrix normal forms.

def smith_normal_form(A, rows, cols):
    """Return (U, D, V) with U*A*V = D diagonal, U and V unimodular.

    Matrices are lists of lists of ints.  Diagonal entries divide each
    other in order.
    """
    D = [row[:] for row in A]
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):   # row i += c * row j
        D[i] = [a + c * b for a, b in zip(D[i], D[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, c):   # col i += c * col j
        for r in D:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            again = False
            for i in range(t + 1, rows):
                if D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t] != 0:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, cols):
                if D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j] != 0:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        t += 1
    # make diagonal entries positive and enforce divisibility chain
    for i in range(min(rows, cols)):
        if D[i][i] < 0:
            U[i] = [-x for x in U[i]]
            D[i][i] = -D[i][i]
    changed = True
    while changed:
        changed = False
        for i in range(min(rows, cols) - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a and b and b % a != 0:
                # merge the two columns, then re-eliminate the 2x2 block;
                # this replaces (a, b) by (gcd, lcm) on the diagonal
                add_col(i, i + 1, 1)
                _fix_block(D, U, V, i)
                changed = True
    return U, D, V


def _fix_block(D, U, V, i):
    """Restore diagonal form on rows/cols i, i+1 after a column merge."""
    def add_row(r, s, c):
        D[r] = [a + c * b for a, b in zip(D[r], D[s])]
        U[r] = [a + c * b for a, b in zip(U[r], U[s])]

    def add_col(r, s, c):
        for row in D:
            row[r] += c * row[s]
        for row in V:
            row[r] += c * row[s]

    def swap_rows(r, s):
        D[r], D[s] = D[s], D[r]
        U[r], U[s] = U[s], U[r]

    def swap_cols(r, s):
        for row in D:
            row[r], row[s] = row[s], row[r]
        for row in V:
            row[r], row[s] = row[s], row[r]

    while D[i + 1][i] != 0 or D[i][i + 1] != 0:
        if D[i + 1][i] != 0:
            if D[i][i] == 0 or (D[i + 1][i] != 0 and abs(D[i + 1][i]) < abs(D[i][i])):
                swap_rows(i, i + 1)
            if D[i + 1][i] != 0 and D[i][i] != 0:
                add_row(i + 1, i, -(D[i + 1][i] // D[i][i]))
        if D[i][i + 1] != 0:
            if D[i][i] == 0 or (D[i][i + 1] != 0 and abs(D[i][i + 1]) < abs(D[i][i])):
                swap_cols(i, i + 1)
            if D[i][i + 1] != 0 and D[i][i] != 0:
                add_col(i + 1, i, -(D[i][i + 1] // D[i][i]))
    if D[i][i] < 0:
        U[i] = [-x for x in U[i]]
        D[i][i] = -D[i][i]
    if D[i + 1][i + 1] < 0:
        U[i + 1] = [-x for x in U[i + 1]]
        D[i + 1][i + 1] = -D[i + 1][i + 1]


def hermite_column_basis(A, rows, cols):
    """A square lattice basis (lower triangular) of the column span of A.

    A is rows x cols with full row rank.
    """
    M = [row[:] for row in A]

    def col(j):
        return [M[i][j] for i in range(rows)]

    for t in range(rows):
        while True:
            nz = [j for j in range(t, cols) if M[t][j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(M[t][j]))
            j0 = nz[0]
            for j in nz[1:]:
                q = M[t][j] // M[t][j0]
                for i in range(rows):
                    M[i][j] -= q * M[i][j0]
        nz = [j for j in range(t, cols) if M[t][j] != 0]
        assert nz, "matrix does not have full row rank"
        j0 = nz[0]
        if j0 != t:
            for i in range(rows):
                M[i][t], M[i][j0] = M[i][j0], M[i][t]
        if M[t][t] < 0:
            for i in range(rows):
                M[i][t] = -M[i][t]
    return [[M[i][j] for j in range(rows)] for i in range(rows)]


def _int_inverse(M, n):
    """Exact inverse of an integer matrix with nonzero determinant,
    returned as a matrix of Fractions reduced to ints when possible."""
    from fractions import Fraction
    aug = [[Fraction(M[i][j]) for j in range(n)] +
           [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [[aug[i][n + j] for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------

class GroupElem:
    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = tuple(c % d for c, d in zip(coords, group.factors))

    def __mul__(self, other):
        assert self.group == other.group
        return GroupElem(self.group,
                         [a + b for a, b in zip(self.coords, other.coords)])

    def inverse(self):
        return GroupElem(self.group, [-a for a in self.coords])

    def __pow__(self, n):
        return GroupElem(self.group, [n * a for a in self.coords])

    def order(self):
        out = 1
        for c, d in zip(self.coords, self.group.factors):
            if c:
                out = lcm(out, d // gcd(c, d))
        return out

    def is_identity(self):
        return all(c == 0 for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, GroupElem) and self.group == other.group
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.group.factors, self.coords))

    def __repr__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


class FinAbGroup:
    """Direct product of cyclic groups Z_{d_1} x ... x Z_{d_k}."""

    def __init__(self, factors):
        self.factors = tuple(int(d) for d in factors)
        assert all(d >= 1 for d in self.factors)
        self._elements = None

    @property
    def order(self):
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def exponent(self):
        out = 1
        for d in self.factors:
            out = lcm(out, d)
        return out

    def element(self, coords):
        return GroupElem(self, coords)

    @property
    def identity(self):
        return GroupElem(self, [0] * len(self.factors))

    def elements(self):
        if self._elements is None:
            self._elements = [GroupElem(self, c)
                              for c in product(*[range(d) for d in self.factors])]
        return self._elements

    def generators(self):
        gens = []
        for i, d in enumerate(self.factors):
            if d > 1:
                coords = [0] * len(self.factors)
                coords[i] = 1
                gens.append(GroupElem(self, coords))
        return gens

    def __eq__(self, other):
        return self is other or (isinstance(other, FinAbGroup)
                                 and self.factors == other.factors)

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        if not self.factors:
            return "Z1"
        return " x ".join("Z%d" % d for d in self.factors)


def direct_product(G1, G2):
    """The product group plus the two coordinate embeddings."""
    G = FinAbGroup(G1.factors + G2.factors)
    k1 = len(G1.factors)

    def emb1(g):
        return G.element(g.coords + (0,) * len(G2.factors))

    def emb2(g):
        return G.element((0,) * k1 + g.coords)

    return G, emb1, emb2


class Subgroup:
    """A subgroup given by full element enumeration."""

    def __init__(self, group, elements):
        self.group = group
        elems = set(elements)
        elems.add(group.identity)
        self.elements = sorted(elems, key=lambda g: g.coords)
        self._set = frozenset(elems)

    @staticmethod
    def generated(group, gens):
        elems = {group.identity}
        frontier = [group.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return Subgroup(group, elems)

    @staticmethod
    def trivial(group):
        return Subgroup(group, [group.identity])

    @staticmethod
    def full(group):
        return Subgroup(group, group.elements())

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._set

    def contains_subgroup(self, other):
        return other._set <= self._set

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.group == other.group
                and self._set == other._set)

    def __hash__(self):
        return hash((self.group.factors, self._set))

    def __repr__(self):
        return "Subgroup(order %d of %r)" % (self.order, self.group)


def all_subgroups(G):
    """Every subgroup of G, by closure growth.  Exhaustive; small G only."""
    seen = {Subgroup.trivial(G)._set: Subgroup.trivial(G)}
    frontier = [Subgroup.trivial(G)]
    while frontier:
        nxt = []
        for S in frontier:
            for g in G.elements():
                if g in S:
                    continue
                T = Subgroup.generated(G, list(S.elements) + [g])
                if T._set not in seen:
                    seen[T._set] = T
                    nxt.append(T)
        frontier = nxt
    return sorted(seen.values(), key=lambda S: (S.order,
                                                [e.coords for e in S.elements]))


def abelian_basis(S):
    """Independent generators of a subgroup: [(elem, order), ...] with
    each order > 1 and orders forming a divisibility chain."""
    G = S.group
    k = len(G.factors)
    if k == 0 or S.order == 1:
        return []
    gens = [list(e.coords) for e in S.elements]
    A = [[G.factors[i] if j == i else 0 for j in range(k)] +
         [gens[m][i] for m in range(len(gens))] for i in range(k)]
    B = hermite_column_basis(A, k, k + len(gens))
    Binv = _int_inverse(B, k)
    # X = B^{-1} diag(d); integral because diag(d)Z^k lies in the lattice
    X = [[Binv[i][j] * G.factors[j] for j in range(k)] for i in range(k)]
    Xi = [[int(x) for x in row] for row in X]
    assert all(Xi[i][j] == X[i][j] for i in range(k) for j in range(k))
    U, D, V = smith_normal_form(Xi, k, k)
    Uinv = _int_inverse(U, k)
    basis = []
    for i in range(k):
        s = D[i][i]
        if s <= 1:
            continue
        coords = [int(sum(B[r][t] * Uinv[t][i] for t in range(k)))
                  for r in range(k)]
        g = G.element(coords)
        assert g in S and g.order() == s, "abelian basis construction failed"
        basis.append((g, s))
    total = 1
    for _, s in basis:
        total *= s
    assert total == S.order
    return basis


def subgroup_as_group(S):
    """Abstract copy of a subgroup: (group, embed, lookup) where embed
    maps abstract elements into S and lookup inverts it."""
    basis = abelian_basis(S)
    H = FinAbGroup([s for _, s in basis])

    def embed(h):
        out = S.group.identity
        for c, (g, _) in zip(h.coords, basis):
            out = out * g ** c
        return out

    lookup = {}
    for h in H.elements():
        lookup[embed(h)] = h
    assert len(lookup) == S.order
    return H, embed, lookup


class QuotientMap:
    """Projection G -> G/H with a deterministic section.

    The quotient is renormalized to invariant-factor form via the Smith
    normal form; the section picks the lexicographically least coset
    representative.
    """

    def __init__(self, G, kernel):
        assert kernel.group == G
        self.source = G
        self.kernel = kernel
        k = len(G.factors)
        gens = [list(e.coords) for e in kernel.elements]
        A = [[G.factors[i] if j == i else 0 for j in range(k)] +
             [gens[m][i] for m in range(len(gens))] for i in range(k)]
        U, D, V = smith_normal_form(A, k, k + len(gens))
        self._U = U
        self._diag = [D[i][i] for i in range(k)]
        keep = [i for i in range(k) if self._diag[i] > 1]
        self._keep = keep
        self.target = FinAbGroup([self._diag[i] for i in keep])
        assert self.target.order * kernel.order == G.order
        # deterministic section: lexicographically least representative
        self._section = {}
        for g in G.elements():
            q = self.project(g)
            cur = self._section.get(q)
            if cur is None or g.coords < cur.coords:
                self._section[q] = g

    def project(self, g):
        k = len(self.source.factors)
        y = [sum(self._U[i][j] * g.coords[j] for j in range(k))
             for i in range(k)]
        return self.target.element([y[i] % self._diag[i] for i in self._keep])

    def section(self, q):
        return self._section[q]

    def transversal(self):
        return [self._section[q] for q in self.target.elements()]

    def __repr__(self):
        return "QuotientMap(%r -> %r)" % (self.source, self.target)


def quotient_by(G, elements):
    return QuotientMap(G, Subgroup(G, elements)
                       if not isinstance(elements, Subgroup) else elements)


# ---------------------------------------------------------------------------
# Characters.

class Character:
    """A character of G, stored as exponents against the cyclic factors:
    chi(g) = zeta_L^( sum_i e_i g_i L/d_i ) with L the exponent of G."""

    __slots__ = ("group", "exps")

    def __init__(self, group, exps):
        self.group = group
        self.exps = tuple(e % d for e, d in zip(exps, group.factors))

    def value_exp(self, g):
        """Exponent k with chi(g) = zeta_L^k, L = exponent of the group."""
        L = self.group.exponent
        return sum(e * c * (L // d) for e, c, d in
                   zip(self.exps, g.coords, self.group.factors)) % L

    def value(self, g, order=None):
        L = self.group.exponent
        v = CycScalar.zeta(L, self.value_exp(g)) if L > 1 else CycScalar.one()
        return v.lift(order) if order is not None else v

    def __mul__(self, other):
        assert self.group == other.group
        return Character(self.group,
                         [a + b for a, b in zip(self.exps, other.exps)])

    def inverse(self):
        return Character(self.group, [-a for a in self.exps])

    def __pow__(self, n):
        return Character(self.group, [n * a for a in self.exps])

    def is_trivial(self):
        return all(e == 0 for e in self.exps)

    def restrict(self, S):
        L = self.group.exponent
        return LocalCharacter(S, L, {h: self.value_exp(h) for h in S.elements})

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.exps == other.exps)

    def __hash__(self):
        return hash((self.group.factors, self.exps))

    def __repr__(self):
        return "Character" + str(self.exps)


def characters(G):
    """All characters of G, trivial one first, in lexicographic order."""
    return [Character(G, exps)
            for exps in product(*[range(d) for d in G.factors])]


def dual_generators(G):
    return [Character(G, e.coords) for e in G.generators()]


class LocalCharacter:
    """A character of a subgroup S <= G, stored as a value table
    h -> exponent of zeta_L, with L the exponent of the parent group."""

    __slots__ = ("subgroup", "L", "table")

    def __init__(self, subgroup, L, table):
        self.subgroup = subgroup
        self.L = L
        self.table = dict(table)

    def value_exp(self, h):
        return self.table[h]

    def value(self, h, order=None):
        v = (CycScalar.zeta(self.L, self.table[h]) if self.L > 1
             else CycScalar.one())
        return v.lift(order) if order is not None else v

    def __mul__(self, other):
        assert self.subgroup == other.subgroup and self.L == other.L
        return LocalCharacter(self.subgroup, self.L,
                              {h: (self.table[h] + other.table[h]) % self.L
                               for h in self.table})

    def inverse(self):
        return LocalCharacter(self.subgroup, self.L,
                              {h: (-v) % self.L for h, v in self.table.items()})

    def is_trivial(self):
        return all(v == 0 for v in self.table.values())

    def _key(self):
        return tuple(self.table[h] for h in self.subgroup.elements)

    def __eq__(self, other):
        return (isinstance(other, LocalCharacter)
                and self.subgroup == other.subgroup and self.L == other.L
                and self._key() == other._key())

    def __hash__(self):
        return hash((self.subgroup.group.factors, self.subgroup._set,
                     self._key()))

    def __repr__(self):
        return "LocalCharacter(%r)" % (self._key(),)


def subgroup_characters(S):
    """All characters of a subgroup S <= G, trivial first, deterministic."""
    L = S.group.exponent
    if L == 1:
        return [LocalCharacter(S, 1, {S.group.identity: 0})]
    basis = abelian_basis(S)
    # decompose each element of S against the basis
    decomp = {}
    for cs in product(*[range(m) for _, m in basis]):
        g = S.group.identity
        for c, (b, _) in zip(cs, basis):
            g = g * b ** c
        decomp[g] = cs
    out = []
    for exps in product(*[range(m) for _, m in basis]):
        table = {}
        for h in S.elements:
            cs = decomp[h]
            table[h] = sum(e * c * (L // m) for e, c, (_, m)
                           in zip(exps, cs, basis)) % L
        out.append(LocalCharacter(S, L, table))
    return out


def extend_character(chi, G=None):
    """All characters of the parent group restricting to chi."""
    S = chi.subgroup
    G = G or S.group
    assert G == S.group
    return [c for c in characters(G) if c.restrict(S) == chi]


def annihilator(S):
    """The characters of G vanishing on a subgroup S (i.e. S-perp)."""
    return [c for c in characters(S.group)
            if all(c.value_exp(h) == 0 for h in S.elements)]


def joint_kernel(G, chars):
    """The subgroup of G on which every given character is trivial."""
    return Subgroup(G, [g for g in G.elements()
                        if all(c.value_exp(g) == 0 for c in chars)])


def generating_subset(G, chars):
    """A small generating subset of the character subgroup given by chars."""
    have = {Character(G, [0] * len(G.factors))}
    gens = []
    target = set(chars)
    for c in chars:
        if c not in have:
            gens.append(c)
            have = set()
            frontier = [Character(G, [0] * len(G.factors))]
            have.add(frontier[0])
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = x * g
                        if y not in have:
                            have.add(y)
                            nxt.append(y)
                frontier = nxt
    assert target <= have
    return gens


# ---------------------------------------------------------------------------
# Bicharacters.

class Bicharacter:
    """A bimultiplicative pairing on a set of group elements, stored as a
    table of root-of-unity exponents: beta(a, b) = zeta_L^exp[a, b]."""

    def __init__(self, group, elements, L, exp):
        self.group = group
        self.elements = list(elements)
        self.L = L
        self.exp = dict(exp)

    @staticmethod
    def from_matrix(G, M, validate=True):
        """Build from an integer matrix against the cyclic generators:
        beta(a, b) = zeta_L^( sum a_i M_ij b_j L/d_i L/d_j ... ) -- more
        precisely M_ij is the exponent of zeta_{gcd(d_i, d_j)}."""
        L = G.exponent
        elems = G.elements()
        exp = {}
        for a in elems:
            for b in elems:
                e = 0
                for i, di in enumerate(G.factors):
                    for j, dj in enumerate(G.factors):
                        gij = gcd(di, dj)
                        e += a.coords[i] * b.coords[j] * M[i][j] * (L // gij)
                exp[(a, b)] = e % L
        beta = Bicharacter(G, elems, L, exp)
        if validate:
            assert beta.is_bimultiplicative()
        return beta

    @staticmethod
    def from_function(group, elements, L, fn):
        exp = {(a, b): fn(a, b) % L for a in elements for b in elements}
        return Bicharacter(group, elements, L, exp)

    def value_exp(self, a, b):
        return self.exp[(a, b)]

    def value(self, a, b, order=None):
        v = (CycScalar.zeta(self.L, self.exp[(a, b)]) if self.L > 1
             else CycScalar.one())
        return v.lift(order) if order is not None else v

    def is_bimultiplicative(self):
        idx = {g: i for i, g in enumerate(self.elements)}
        for a in self.elements:
            for b in self.elements:
                ab = a * b
                if ab not in idx:
                    return False
                for c in self.elements:
                    if (self.exp[(ab, c)] -
                            self.exp[(a, c)] - self.exp[(b, c)]) % self.L:
                        return False
                    if (self.exp[(c, ab)] -
                            self.exp[(c, a)] - self.exp[(c, b)]) % self.L:
                        return False
        return True

    def is_alternating(self):
        return all(self.exp[(t, t)] == 0 for t in self.elements)

    def radical(self):
        rad = [t for t in self.elements
               if all(self.exp[(t, s)] == 0 for s in self.elements)]
        return Subgroup(self.group, rad)

    def restrict(self, elements):
        return Bicharacter(self.group, elements, self.L,
                           {(a, b): self.exp[(a, b)]
                            for a in elements for b in elements})


def isotropic_subgroups(beta):
    """All subgroups of the domain on which beta is identically 1."""
    G = beta.group
    exp = beta.exp
    elems = beta.elements
    triv = Subgroup.trivial(G)
    seen = {triv._set: triv}
    frontier = [triv]
    while frontier:
        nxt = []
        for S in frontier:
            for g in elems:
                if g in S or exp[(g, g)] != 0:
                    continue
                if any(exp[(g, s)] != 0 or exp[(s, g)] != 0
                       for s in S.elements):
                    continue
                T = Subgroup.generated(G, list(S.elements) + [g])
                if T._set not in seen:
                    # closure can add elements; re-check isotropy
                    if all(exp[(a, b)] == 0
                           for a in T.elements for b in T.elements):
                        seen[T._set] = T
                        nxt.append(T)
        frontier = nxt
    return sorted(seen.values(), key=lambda S: (S.order,
                                                [e.coords for e in S.elements]))


def maximal_isotropic_subgroups(beta):
    subs = isotropic_subgroups(beta)
    out = []
    for S in subs:
        if not any(T is not S and T.contains_subgroup(S) and T.order > S.order
                   for T in subs):
            out.append(S)
    return out
