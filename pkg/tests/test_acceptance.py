"""Acceptance suite: one test per criterion, each printing a single
pass/fail line through pytest's verbose output."""

import random
import time

import pytest
from gmpy2 import mpq

from loopmod.central import central_image, maximal_graded_subfields
from loopmod.cyclo import CycScalar, cyclotomic_polynomial
from loopmod.fixtures import pauli_twisted_algebra, regular_module
from loopmod.gmod import graded_centralizer, intertwiners, \
    is_graded_simple, is_simple_ungraded
from loopmod.invars import invariant_profile
from loopmod.linalg import ExactMatrix
from loopmod.randgen import corpus, random_division_algebra
from loopmod.selftest import (
    check_decomposition, check_envelope, check_isotropic_count,
    check_loop_centralizer, check_phi_psi, check_roundtrip,
    check_transitivity, check_twist_witness,
)

CORPUS_SEED = 2025
CORPUS_SIZE = 50


@pytest.fixture(scope="module")
def pairs():
    return corpus(CORPUS_SEED, CORPUS_SIZE)


def test_criterion_01_pauli_fixture():
    t0 = time.monotonic()
    A = pauli_twisted_algebra()
    W = regular_module(A)
    verdict, _ = is_graded_simple(W)
    assert verdict is True
    C, _ = graded_centralizer(W)
    assert C.dim == 4
    prof = invariant_profile(W)
    assert prof.T.order == 4
    assert {t.coords for t in prof.T.elements} == \
        {g.coords for g in A.group.elements()}
    assert prof.Z.order == 1
    assert prof.schur_index == 2
    assert len(prof.inertia) == 4
    fields = maximal_graded_subfields(W)
    assert len(fields) == 3
    V = central_image(W, fields[0]).module
    v, _ = is_simple_ungraded(V)
    assert v is True
    assert V.dim == 2
    assert len(intertwiners(V, W)) == 2
    assert W.dim == 2 * V.dim
    assert time.monotonic() - t0 < 1.0


def test_criterion_02_roundtrip_corpus(pairs):
    t0 = time.monotonic()
    for W, F in pairs:
        ok, detail = check_roundtrip(W, F)
        assert ok, detail
    assert time.monotonic() - t0 < 60.0


def test_criterion_03_phi_psi_corpus(pairs):
    rng = random.Random(CORPUS_SEED + 1)
    for W, F in pairs:
        ok, detail = check_phi_psi(W, F, rng)
        assert ok, detail


def test_criterion_04_isotropic_profile():
    rng = random.Random(CORPUS_SEED + 2)
    for _ in range(50):
        A = random_division_algebra(rng)
        ok, detail = check_isotropic_count(A)
        assert ok, detail


def test_criterion_05_decompositions(pairs):
    for W, F in pairs:
        ok, detail = check_decomposition(W, F)
        assert ok, detail


def test_criterion_06_loop_centralizer(pairs):
    for W, F in pairs:
        ok, detail = check_loop_centralizer(W, F)
        assert ok, detail


def test_criterion_07_transitivity(pairs):
    for W, F in pairs:
        ok, detail = check_transitivity(W, F)
        assert ok, detail


def test_criterion_08_twist_witnesses(pairs):
    for W, F in pairs:
        ok, detail = check_twist_witness(W, F)
        assert ok, detail


def test_criterion_09_envelope_pipeline(pairs):
    for W, F in pairs:
        t0 = time.monotonic()
        ok, detail = check_envelope(W, F)
        assert ok, detail
        assert time.monotonic() - t0 < 10.0
    # the Pauli envelope is the regular Pauli module up to graded iso
    from loopmod.envelope import graded_envelope
    from loopmod.gmod import find_isomorphism
    A = pauli_twisted_algebra()
    W = regular_module(A)
    V = central_image(W, maximal_graded_subfields(W)[0]).module
    res = graded_envelope(V)
    assert any(find_isomorphism(res.W.shift(g), W,
                                degree=W.grading_group.identity)[0] == "iso"
               for g in W.grading_group.elements())


def _poly_mul(p, q):
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def test_criterion_10_exact_foundation():
    # product of cyclotomic polynomials over the divisors
    for N in range(1, 65):
        prod = [mpq(1)]
        for d in range(1, N + 1):
            if N % d == 0:
                prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
        expect = [mpq(-1)] + [mpq(0)] * (N - 1) + [mpq(1)]
        assert prod == expect, "Phi product fails at N=%d" % N

    # rank plus nullity on random matrices
    rng = random.Random(CORPUS_SEED + 3)
    for _ in range(100):
        order = rng.choice([1, 2, 3, 4, 6, 8, 12])
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        def rand_scalar():
            q = CycScalar.rational(mpq(rng.randint(-3, 3)), order)
            if order > 1:
                q = q * CycScalar.zeta(order, rng.randrange(order))
            return q

        data = [[rand_scalar() for _ in range(cols)] for _ in range(rows)]
        m = ExactMatrix(data, order)
        assert m.rank() + len(m.kernel()) == cols

    # field axioms on random triples
    for _ in range(100):
        order = rng.choice([1, 3, 4, 5, 8, 12])
        def rand_field_elem():
            q = CycScalar.rational(mpq(rng.randint(-4, 4),
                                       rng.randint(1, 4)), order)
            if order > 1:
                q = q * CycScalar.zeta(order, rng.randrange(order))
            return q

        a, b, c = rand_field_elem(), rand_field_elem(), rand_field_elem()
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == CycScalar.zero(a.order)
        if not a.is_zero():
            assert a * a.inverse() == CycScalar.one(a.order)
