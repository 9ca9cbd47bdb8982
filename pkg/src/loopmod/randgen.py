"""Seeded random instances for the property suite and the CLI.

Instances are built from twisted group algebras over random alternating
bicharacters, plain group algebras and smash products; modules are
regular modules, random shifts, and loops of central images.
"""

import random
from math import gcd

from .abgroup import FinAbGroup
from .central import central_image, maximal_graded_subfields
from .cyclo import CycScalar
from .fixtures import regular_module
from .galg import Cocycle, group_algebra, smash_product, \
    twisted_group_algebra
from .loopfun import loop

SMALL_SHAPES = [(2,), (3,), (4,), (5,), (6,), (7,), (8,),
                (2, 2), (2, 4), (2, 2, 2)]

DIVISION_SHAPES = SMALL_SHAPES + [(3, 3), (4, 4), (2, 2, 4), (6, 6),
                                  (2, 8), (4, 8), (8, 8), (5, 5),
                                  (2, 2, 2, 2), (12,), (2, 4, 4)]


def random_alternating_matrix(rng, G):
    k = len(G.factors)
    M = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            e = rng.randrange(gcd(G.factors[i], G.factors[j]))
            M[i][j] = e
            M[j][i] = -e
    return M


def random_division_algebra(rng, shapes=DIVISION_SHAPES):
    """A twisted group algebra with a random alternating bicharacter;
    always graded division."""
    G = FinAbGroup(rng.choice(shapes))
    M = random_alternating_matrix(rng, G)
    sigma = Cocycle.from_alternating_matrix(G, M)
    return twisted_group_algebra(G, sigma)


def random_smash_algebra(rng, sizes=(2, 3)):
    n = rng.choice(sizes)
    A = FinAbGroup([n])
    B = FinAbGroup([n])
    k = rng.randrange(1, n) if n > 1 else 0

    def p(b, a):
        if n == 1:
            return CycScalar.one()
        return CycScalar.zeta(n) ** (k * b.coords[0] * a.coords[0])

    return smash_product(A, B, p)


def random_algebra(rng, max_dim=12):
    """A graded simple-regular-module source: twisted group algebra,
    group algebra or smash product, of dimension at most max_dim."""
    while True:
        kind = rng.randrange(3)
        if kind == 0:
            A = random_division_algebra(rng, SMALL_SHAPES)
        elif kind == 1:
            A = group_algebra(FinAbGroup(rng.choice(SMALL_SHAPES)))
        else:
            A = random_smash_algebra(rng)
        if A.dim <= max_dim:
            return A


def random_pair(rng, max_dim=12):
    """(W, F): a graded simple module with split graded division
    centralizer, a random shift, and a random maximal graded subfield."""
    A = random_algebra(rng, max_dim)
    W = regular_module(A)
    g = rng.choice(A.group.elements())
    W = W.shift(g)
    fields = maximal_graded_subfields(W)
    F = rng.choice(fields)
    return W, F


def random_loop_instance(rng, max_dim=12):
    """A graded simple module arising as the loop of a central image,
    together with the quotient map used."""
    W, F = random_pair(rng, max_dim)
    ci = central_image(W, F)
    return loop(ci.module, ci.pi), ci


def corpus(seed, count, max_dim=12):
    """A deterministic list of (W, F) pairs."""
    rng = random.Random(seed)
    return [random_pair(rng, max_dim) for _ in range(count)]
