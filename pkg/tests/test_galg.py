import pytest

from loopmod.abgroup import FinAbGroup, Subgroup
from loopmod.cyclo import CycScalar, FieldNotSplit, QQ
from loopmod.galg import (
    Cocycle, GradedAlgebra, center_of, central_support, group_algebra,
    normalize_subfield_basis, primitive_central_idempotents,
    radical_via_trace, smash_product, span_closure, trace,
    twisted_group_algebra,
)
from loopmod.linalg import ExactMatrix


def pauli_algebra():
    """F^sigma(Z2 x Z2) with commutation bicharacter (-1)^(a1 b2 - a2 b1);
    isomorphic to 2x2 matrices with the fine grading."""
    G = FinAbGroup([2, 2])
    sigma = Cocycle.from_alternating_matrix(G, [[0, 1], [-1, 0]])
    return twisted_group_algebra(G, sigma)


def test_cocycle_validation():
    G = FinAbGroup([2, 2])
    sigma = Cocycle.from_alternating_matrix(G, [[0, 1], [-1, 0]])
    assert sigma.is_normalized()
    assert sigma.validate()
    assert Cocycle.trivial(G).validate()


def test_twisted_group_algebra_structure():
    A = pauli_algebra()
    assert A.dim == 4
    assert A.validate() == []
    assert A.is_graded_division()
    # commutation: c_s c_t = beta(s,t) c_t c_s with beta values +-1
    G = A.group
    s, t = G.element([1, 0]), G.element([0, 1])
    i, j = A.labels.index(s), A.labels.index(t)
    st = A.multiply(A.basis_vec(i), A.basis_vec(j))
    ts = A.multiply(A.basis_vec(j), A.basis_vec(i))
    assert st == [x * CycScalar.rational(-1, A.order) for x in ts]
    # center is trivial (support = identity only)
    assert central_support(A).order == 1


def test_group_algebra_idempotents():
    G = FinAbGroup([2])
    A = group_algebra(G)
    assert A.validate() == []
    eps = primitive_central_idempotents(A)
    assert len(eps) == 2
    total = A.zero_vec()
    for e in eps:
        assert A.multiply(e, e) == e
        total = [a + b for a, b in zip(total, e)]
    assert total == A.unit
    assert A.multiply(eps[0], eps[1]) == A.zero_vec()


def test_idempotents_z2xz2():
    A = group_algebra(FinAbGroup([2, 2]))
    eps = primitive_central_idempotents(A)
    assert len(eps) == 4
    for i, e in enumerate(eps):
        assert A.multiply(e, e) == e
        for j, f in enumerate(eps):
            if i != j:
                assert A.multiply(e, f) == A.zero_vec()


def test_smash_product():
    Z2 = FinAbGroup([2])
    minus_one = CycScalar.rational(-1, 2)

    def beta(b, a):
        return minus_one ** (b.coords[0] * a.coords[0]) \
            if b.coords[0] * a.coords[0] % 2 else CycScalar.one(2)

    A = smash_product(Z2, Z2, beta)
    assert A.dim == 4
    assert A.validate() == []
    assert A.is_graded_division()
    assert central_support(A).order == 1


def test_center_of_group_algebra():
    A = group_algebra(FinAbGroup([4]))
    cent = center_of(A)
    assert len(cent) == 4
    assert central_support(A).order == 4


def test_span_closure_pauli_matrices():
    one = CycScalar.one(4)
    i = CycScalar.zeta(4)
    z = CycScalar.zero(4)
    X = ExactMatrix([[z, one], [one, z]])
    Zm = ExactMatrix([[one, z], [z, -1 * one]])
    basis = span_closure([X, Zm])
    assert len(basis) == 4
    assert radical_via_trace(basis) == []


def test_radical_upper_triangular():
    one, z = CycScalar.one(), CycScalar.zero()
    E11 = ExactMatrix([[one, z], [z, z]])
    E12 = ExactMatrix([[z, one], [z, z]])
    E22 = ExactMatrix([[z, z], [z, one]])
    rad = radical_via_trace([E11, E12, E22])
    assert len(rad) == 1
    # the radical element is a multiple of E12
    m = rad[0]
    assert m.data[0][0].is_zero() and m.data[1][1].is_zero() \
        and m.data[1][0].is_zero() and not m.data[0][1].is_zero()


def test_normalize_subfield_raises_order():
    # c_g^2 = -1 needs a fourth root of unity to normalize
    G = FinAbGroup([2])
    e, g = G.elements()
    m1 = CycScalar.rational(-1)
    one = CycScalar.one()
    table = {(e, e): one, (e, g): one, (g, e): one, (g, g): m1}
    A = twisted_group_algebra(G, Cocycle(G, table))
    assert A.validate() == []
    c = normalize_subfield_basis(A, Subgroup.full(G))
    cg = c[g]
    assert A.multiply(cg, cg) == A.unit
    assert max(x.order for x in cg) % 4 == 0


def test_normalize_subfield_not_split():
    # c_g^2 = 2 cannot be normalized inside cyclotomic fields
    G = FinAbGroup([2])
    e, g = G.elements()
    two, one = CycScalar.rational(2), CycScalar.one()
    table = {(e, e): one, (e, g): one, (g, e): one, (g, g): two}
    A = twisted_group_algebra(G, Cocycle(G, table))
    with pytest.raises(FieldNotSplit):
        normalize_subfield_basis(A, Subgroup.full(G))


def test_left_mult_matrix_trace():
    A = group_algebra(FinAbGroup([3]))
    m = A.left_mult_matrix(A.unit)
    assert trace(m) == CycScalar.rational(3, m.order)
