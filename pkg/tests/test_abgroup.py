import random

from loopmod.abgroup import (
    Bicharacter, Character, FinAbGroup, QuotientMap, Subgroup,
    abelian_basis, all_subgroups, annihilator, characters, direct_product,
    dual_generators, extend_character, generating_subset, isotropic_subgroups,
    joint_kernel, maximal_isotropic_subgroups, smith_normal_form,
    subgroup_as_group, subgroup_characters,
)
from loopmod.cyclo import CycScalar


def test_group_basics():
    G = FinAbGroup([2, 4])
    assert G.order == 8 and G.exponent == 4
    assert len(G.elements()) == 8
    g = G.element([1, 3])
    assert (g * g).coords == (0, 2)
    assert (g * g.inverse()).is_identity()
    assert g.order() == 4
    assert G.element([1, 0]).order() == 2


def test_smith_normal_form_random():
    rng = random.Random(3)
    for _ in range(50):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        A = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        U, D, V = smith_normal_form(A, rows, cols)
        # check U A V == D
        AV = [[sum(A[i][t] * V[t][j] for t in range(cols))
               for j in range(cols)] for i in range(rows)]
        UAV = [[sum(U[i][t] * AV[t][j] for t in range(rows))
                for j in range(cols)] for i in range(rows)]
        for i in range(rows):
            for j in range(cols):
                assert UAV[i][j] == (D[i][j] if i == j else 0)
        diag = [D[i][i] for i in range(min(rows, cols)) if D[i][i] != 0]
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0


def test_subgroup_generation_and_enumeration():
    G = FinAbGroup([2, 2, 2])
    subs = all_subgroups(G)
    # elementary abelian of rank 3: 1 + 7 + 7 + 1 plus the 2-dim count 7
    assert len(subs) == 16
    G2 = FinAbGroup([4, 2])
    assert len(all_subgroups(G2)) == 8
    S = Subgroup.generated(G2, [G2.element([2, 1])])
    assert S.order == 2


def test_abelian_basis():
    rng = random.Random(5)
    for factors in ([2, 4], [2, 2, 2], [6], [4, 4], [2, 3, 4]):
        G = FinAbGroup(factors)
        for _ in range(10):
            gens = [rng.choice(G.elements()) for _ in range(2)]
            S = Subgroup.generated(G, gens)
            basis = abelian_basis(S)
            total = 1
            for g, m in basis:
                assert g in S and g.order() == m
                total *= m
            assert total == S.order
            orders = [m for _, m in basis]
            for a, b in zip(orders, orders[1:]):
                assert b % a == 0
            # independence: the span enumerates S without repeats
            H, embed, lookup = subgroup_as_group(S)
            assert H.order == S.order
            assert len({embed(h) for h in H.elements()}) == S.order


def test_quotient_map():
    G = FinAbGroup([4, 4])
    H = Subgroup.generated(G, [G.element([2, 2])])
    pi = QuotientMap(G, H)
    Q = pi.target
    assert Q.order == 8
    # projection is a homomorphism with kernel H
    for g1 in G.elements():
        for g2 in G.elements():
            assert pi.project(g1 * g2) == pi.project(g1) * pi.project(g2)
    assert all(pi.project(h).is_identity() for h in H.elements)
    ker = [g for g in G.elements() if pi.project(g).is_identity()]
    assert set(ker) == set(H.elements)
    # section is a set-wise inverse picking lex-least representatives
    for q in Q.elements():
        assert pi.project(pi.section(q)) == q
    reps = pi.transversal()
    assert len(reps) == 8
    assert reps[0] == G.identity


def test_characters_orthogonality():
    G = FinAbGroup([2, 4])
    chars = characters(G)
    assert len(chars) == 8
    assert chars[0].is_trivial()
    N = G.exponent
    for c1 in chars:
        for c2 in chars:
            s = CycScalar.zero(N)
            for g in G.elements():
                s = s + c1.value(g, N) * c2.inverse().value(g, N)
            want = CycScalar.rational(G.order if c1 == c2 else 0, N)
            assert s == want


def test_annihilator_and_extension():
    G = FinAbGroup([4, 2])
    H = Subgroup.generated(G, [G.element([2, 0])])
    perp = annihilator(H)
    assert len(perp) == G.order // H.order
    assert joint_kernel(G, perp).elements == H.elements
    # every character of H has [G:H] extensions
    for chi in subgroup_characters(H):
        exts = extend_character(chi)
        assert len(exts) == G.order // H.order
        for c in exts:
            assert all(c.value(h) == chi.value(h) for h in H.elements)
    assert len(subgroup_characters(H)) == H.order


def test_generating_subset():
    G = FinAbGroup([2, 2, 2])
    chars = characters(G)
    gens = generating_subset(G, chars)
    assert len(gens) <= 3


def test_bicharacter_symplectic():
    # beta((x1,y1),(x2,y2)) = i^(y1 x2 - x1 y2) on Z4 x Z4
    G = FinAbGroup([4, 4])
    M = [[0, -1], [1, 0]]
    beta = Bicharacter.from_matrix(G, M)
    assert beta.is_alternating()
    assert beta.radical().order == 1
    maxi = maximal_isotropic_subgroups(beta)
    for H in maxi:
        Z = beta.radical()
        assert len(beta.elements) * Z.order == H.order ** 2
    # the diagonal-doubled subgroup 2Z4 x 2Z4 is isotropic and maximal
    K = Subgroup.generated(G, [G.element([2, 0]), G.element([0, 2])])
    b = beta.restrict(K.elements)
    assert all(b.value_exp(a, c) == 0 for a in K.elements for c in K.elements)
    assert any(H == K for H in maxi)


def test_isotropic_counts_degenerate():
    # trivial pairing: every subgroup is isotropic, only maximal is G
    G = FinAbGroup([2, 2])
    beta = Bicharacter.from_matrix(G, [[0, 0], [0, 0]])
    assert beta.radical().order == 4
    subs = isotropic_subgroups(beta)
    assert len(subs) == len(all_subgroups(G)) == 5
    maxi = maximal_isotropic_subgroups(beta)
    assert len(maxi) == 1 and maxi[0].order == 4


def test_random_bicharacter_isotropy_identity():
    rng = random.Random(9)
    for _ in range(10):
        factors = rng.choice([[2, 2], [4, 2], [2, 2, 2], [4, 4], [3, 3]])
        G = FinAbGroup(factors)
        k = len(factors)
        M = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(i + 1, k):
                M[i][j] = rng.randrange(0, 12)
                M[j][i] = -M[i][j]
        beta = Bicharacter.from_matrix(G, M)
        assert beta.is_alternating()
        Z = beta.radical()
        for H in maximal_isotropic_subgroups(beta):
            assert G.order * Z.order == H.order ** 2
            assert Z.elements == [e for e in H.elements if e in Z]


def test_direct_product():
    A, B = FinAbGroup([2]), FinAbGroup([3])
    G, e1, e2 = direct_product(A, B)
    assert G.order == 6
    a = e1(A.element([1]))
    b = e2(B.element([1]))
    assert (a * b).coords == (1, 1)


def test_dual_generators():
    G = FinAbGroup([2, 4])
    gens = dual_generators(G)
    assert len(gens) == 2
    span = set()
    frontier = [Character(G, [0, 0])]
    span.add(frontier[0])
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    assert len(span) == 8
