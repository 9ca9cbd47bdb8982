import random

from loopmod.abgroup import (
    FinAbGroup, QuotientMap, Subgroup, annihilator, subgroup_characters,
)
from loopmod.cyclo import CycScalar
from loopmod.galg import group_algebra
from loopmod.gmod import (
    GradedModule, graded_centralizer, is_graded_simple,
)
from loopmod.linalg import ExactMatrix
from loopmod.loopfun import (
    centralizer_loop_identity, default_transversal, delta_maps, forgetful,
    induce, is_thin, loop, loop_morphism, phi_map, phi_raw, psi_map,
    transitivity_iso,
)


def z4_over_z2():
    """R = F(Z4); V = the regular module of F(Z2) pulled back along
    pi: Z4 -> Z2."""
    G = FinAbGroup([4])
    H = Subgroup.generated(G, [G.element([2])])
    pi = QuotientMap(G, H)
    Q = pi.target
    R = group_algebra(G)
    QA = group_algebra(Q)
    action = []
    for b in range(R.dim):
        gbar = pi.project(R.degrees[b])
        action.append(QA.left_mult_matrix(QA.basis_vec(
            QA.labels.index(gbar))))
    V = GradedModule(R, list(QA.degrees), action, Q, pi.project)
    return V, pi


def trivially_graded(R, mats, G):
    """Wrap matrices as a module graded by the trivial quotient of G."""
    pi = QuotientMap(G, Subgroup.full(G))
    degs = [pi.target.identity] * mats[0].rows
    return GradedModule(R, degs, mats, pi.target, pi.project), pi


def test_loop_of_pullback_is_regular():
    V, pi = z4_over_z2()
    assert V.validate() == []
    L = loop(V, pi)
    assert L.validate() == []
    assert L.dim == 4
    verdict, _ = is_graded_simple(L)
    assert verdict is True


def test_delta_maps_are_graded_centralizing():
    V, pi = z4_over_z2()
    L = loop(V, pi)
    deltas = delta_maps(L)
    assert len(deltas) == 2
    for h, d in deltas.items():
        for m in L.action:
            assert d @ m == m @ d
        # delta_h shifts degrees by h
        for col, (g, j) in enumerate(L.labels):
            vcol = d.column_vec(col)
            for row, c in enumerate(vcol):
                if not c.is_zero():
                    assert L.degrees[row] == L.degrees[col] * h
    # the deltas compose like the group algebra of H
    hs = list(deltas)
    assert deltas[hs[0]] @ deltas[hs[1]] == deltas[hs[0] * hs[1]]


def test_forgetful_inverts_loop_grading():
    V, pi = z4_over_z2()
    L = loop(V, pi)
    F = forgetful(L, pi)
    assert F.validate() == []
    assert sorted(d.coords for d in F.degrees) == \
        sorted((pi.project(d).coords for d in L.degrees))


def test_induced_module_grading():
    V, pi = z4_over_z2()
    I = induce(V, pi)
    assert I.module.validate() == []
    assert I.module.dim == pi.kernel.order * V.dim
    # each G-degree over gbar carries dim V_gbar
    for g in pi.source.elements():
        idxs = I.module.component_indices(g)
        assert len(idxs) == len(V.component_indices(pi.project(g)))


def test_phi_psi_mutually_inverse():
    V, pi = z4_over_z2()
    L = loop(V, pi)
    I = induce(V, pi)
    phi = phi_map(L, I)
    psi = psi_map(L, I)
    assert phi.is_graded() and phi.is_module_map()
    assert psi.is_graded() and psi.is_module_map()
    assert psi.matrix @ phi.matrix == ExactMatrix.identity(L.dim, 1)
    assert phi.matrix @ psi.matrix == \
        ExactMatrix.identity(I.module.dim, 1)


def test_phi_transversal_independence():
    V, pi = z4_over_z2()
    L = loop(V, pi)
    t1 = default_transversal(pi)
    perp = annihilator(pi.kernel)
    rng = random.Random(4)
    for _ in range(3):
        t2 = [chi * rng.choice(perp) for chi in t1]
        I1 = induce(V, pi, t1)
        I2 = induce(V, pi, t2)
        raw1 = phi_raw(L, I1)
        raw2 = phi_raw(L, I2)
        # canonical identification of raw coordinates: chi_j^1 (x) v_m
        # equals varpi_j^{-1}(xi(deg m)) chi_j^2 (x) v_m
        order = max(raw1.order, raw2.order)
        iota = ExactMatrix.zero(len(I2.raw_labels), len(I1.raw_labels),
                                order)
        for (j, m), col in I1.raw_index.items():
            res = t1[j].restrict(pi.kernel)
            j2 = next(i for i, c in enumerate(t2)
                      if c.restrict(pi.kernel) == res)
            varpi = t1[j] * t2[j2].inverse()
            g0 = pi.section(V.degrees[m])
            iota.data[I2.raw_index[(j2, m)]][col] = \
                varpi.value(g0, order)
        assert iota @ raw1 == raw2


def test_transitivity():
    # G = Z4 with K = 2Z4 inside H = G
    G = FinAbGroup([4])
    H = Subgroup.full(G)
    K = Subgroup.generated(G, [G.element([2])])
    pi = QuotientMap(G, H)
    pi1 = QuotientMap(G, K)
    # image of H in G/K is everything
    Himg = Subgroup(pi1.target, [pi1.project(h) for h in H.elements])
    pi2 = QuotientMap(pi1.target, Himg)
    R = group_algebra(G)
    one = CycScalar.one()
    V = GradedModule(R, [pi.target.identity],
                     [ExactMatrix([[one]])] * R.dim,
                     pi.target, pi.project)
    assert V.validate() == []
    gm, inner, outer = transitivity_iso(V, pi, pi1, pi2)
    assert gm.is_graded() and gm.is_module_map() and gm.is_invertible()


def test_loop_morphism_with_twist():
    # V has c_g acting as +1, V' as -1; they become isomorphic after
    # twisting by the sign character of H = Z2
    G = FinAbGroup([2])
    pi = QuotientMap(G, Subgroup.full(G))
    R = group_algebra(G)
    one = CycScalar.one()
    m1 = CycScalar.rational(-1)
    T = pi.target
    V = GradedModule(R, [T.identity],
                     [ExactMatrix([[one]]), ExactMatrix([[one]])],
                     T, pi.project)
    Vp = GradedModule(R, [T.identity],
                      [ExactMatrix([[one]]), ExactMatrix([[m1]])],
                      T, pi.project)
    LV, LVp = loop(V, pi), loop(Vp, pi)
    chi = [c for c in subgroup_characters(pi.kernel) if not c.is_trivial()][0]
    phi = ExactMatrix([[one]])
    gm = loop_morphism(LV, LVp, phi, chi)
    assert gm.is_graded() and gm.is_module_map() and gm.is_invertible()
    # with the trivial character the map is not a module morphism
    triv = [c for c in subgroup_characters(pi.kernel) if c.is_trivial()][0]
    gm2 = loop_morphism(LV, LVp, phi, triv)
    assert not gm2.is_module_map()


def test_centralizer_loop_identity():
    V, pi = z4_over_z2()
    L = loop(V, pi)
    lhs, rhs, equal = centralizer_loop_identity(L)
    assert equal


def test_thinness():
    V, pi = z4_over_z2()
    assert is_thin(V, pi) is True
    # the forgotten regular module of F(Z2) is not thin over Z2 -> 1:
    # its loop splits into two graded pieces
    G = FinAbGroup([2])
    R = group_algebra(G)
    from loopmod.fixtures import regular_module
    W = regular_module(R)
    piT = QuotientMap(G, Subgroup.full(G))
    U = forgetful(W, piT)
    assert is_thin(U, piT) is False
