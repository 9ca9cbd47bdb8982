"""Shared example algebras and modules."""

from .abgroup import FinAbGroup
from .cyclo import CycScalar
from .galg import Cocycle, GradedAlgebra, twisted_group_algebra
from .gmod import GradedModule, matrices_to_algebra
from .linalg import ExactMatrix


def regular_module(A):
    """A acting on itself by left multiplication, graded by A's group."""
    action = [A.left_mult_matrix(A.basis_vec(b)) for b in range(A.dim)]
    return GradedModule(A, list(A.degrees), action)


def pauli_twisted_algebra():
    """F^sigma(Z2 x Z2), the abstract form of 2x2 matrices with the fine
    grading."""
    G = FinAbGroup([2, 2])
    sigma = Cocycle.from_alternating_matrix(G, [[0, 1], [-1, 0]])
    return twisted_group_algebra(G, sigma)


def pauli_matrix_algebra():
    """2x2 matrices graded by Z2 x Z2: identity, diag(1,-1), the flip,
    and the signed flip, with degrees e, g, h, gh."""
    one, z = CycScalar.one(), CycScalar.zero()
    I = ExactMatrix([[one, z], [z, one]])
    D = ExactMatrix([[one, z], [z, -1 * one]])
    X = ExactMatrix([[z, one], [one, z]])
    Y = ExactMatrix([[z, one], [-1 * one, z]])
    G = FinAbGroup([2, 2])
    degs = [G.element([0, 0]), G.element([1, 0]),
            G.element([0, 1]), G.element([1, 1])]
    A, mats = matrices_to_algebra(G, [I, D, X, Y], degs)
    return A, mats


def natural_module(A, mats, grading_group=None, degrees=None):
    """The column module of a concrete matrix algebra; trivially graded
    unless degrees are supplied."""
    n = mats[0].rows
    GG = grading_group or FinAbGroup([])
    degs = degrees or [GG.identity] * n
    return GradedModule(A, degs, list(mats), GG, lambda g: GG.identity)


def group_algebra_z2():
    """F(Z2) with its two one dimensional modules and regular module."""
    from .galg import group_algebra
    A = group_algebra(FinAbGroup([2]))
    return A
