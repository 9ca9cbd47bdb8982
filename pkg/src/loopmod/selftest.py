"""The property suite: seeded randomized checks shared by the CLI
selftest command and the test suite.

Every check returns (ok, detail) with a short human-readable detail
string; run_suite collects counts over a deterministic corpus.
"""

import random

from .abgroup import QuotientMap, Subgroup, all_subgroups, annihilator, \
    maximal_isotropic_subgroups
from .central import all_central_images, central_image, \
    commutation_bicharacter, loop_back_iso, loop_iso_implies_twist, \
    Decomposition
from .envelope import graded_envelope
from .gmod import find_isomorphism, is_central, is_graded_simple, \
    is_simple_ungraded
from .invars import invariant_profile
from .linalg import ExactMatrix
from .loopfun import centralizer_loop_identity, default_transversal, \
    delta_maps, induce, loop, phi_map, phi_raw, psi_map, \
    transitivity_iso, transversal_identification
from .randgen import random_division_algebra, random_pair


def check_roundtrip(W, F):
    """Loop of the central image recovers W, carrying the delta
    subfield onto F."""
    ci = central_image(W, F)
    gm = loop_back_iso(ci)
    if not (gm.is_graded() and gm.is_module_map() and gm.is_invertible()):
        return False, "loop-back map is not a graded isomorphism"
    L = loop(ci.module, ci.pi)
    inv = gm.matrix.inverse()
    for h, d in delta_maps(L).items():
        if gm.matrix @ d @ inv != F.ops[h]:
            return False, "delta operator does not match the subfield"
    return True, "dim W=%d, |H|=%d" % (W.dim, F.support.order)


def check_phi_psi(W, F, rng):
    """phi and psi are mutually inverse graded isomorphisms, and phi is
    transversal independent up to the canonical identification."""
    ci = central_image(W, F)
    V, pi = ci.module, ci.pi
    L = loop(V, pi)
    I = induce(V, pi)
    phi = phi_map(L, I)
    psi = psi_map(L, I)
    if not (phi.is_graded() and phi.is_module_map()):
        return False, "phi is not a graded module map"
    if not (psi.is_graded() and psi.is_module_map()):
        return False, "psi is not a graded module map"
    c1 = psi.matrix @ phi.matrix
    c2 = phi.matrix @ psi.matrix
    if c1 != ExactMatrix.identity(L.dim, c1.order) or \
       c2 != ExactMatrix.identity(L.dim, c2.order):
        return False, "phi and psi are not mutually inverse"
    ann = annihilator(pi.kernel)
    tr2 = [chi * rng.choice(ann) for chi in default_transversal(pi)]
    I2 = induce(V, pi, tr2)
    D = transversal_identification(I, I2)
    if D @ phi_raw(L, I2) != phi_raw(L, I):
        return False, "phi changed under a transversal change"
    return True, "dim L=%d" % L.dim


def check_isotropic_count(A):
    """|T||Z| = |H|^2 for every maximal isotropic subgroup of the
    commutation bicharacter of a graded division algebra."""
    T, beta = commutation_bicharacter(A)
    Z = beta.radical()
    maxi = maximal_isotropic_subgroups(beta)
    if not maxi:
        return False, "no maximal isotropic subgroup found"
    for H in maxi:
        if T.order * Z.order != H.order ** 2:
            return False, "|T||Z| != |H|^2 for |H|=%d" % H.order
    return True, "|T|=%d, |Z|=%d, %d maximal isotropics" % (
        T.order, Z.order, len(maxi))


def check_decomposition(W, F):
    """Isotypic multiplicities all equal |H/Z|; dimensions add up; the
    components are pairwise non-isomorphic graded simple modules."""
    dec = Decomposition(W, F)
    vdim = central_image(W, F).module.dim
    mult = F.support.order // dec.Z.order
    total = 0
    for comp in dec.isotypic:
        if comp.dim != mult * (comp.dim // mult):
            return False, "component dim not a multiple of |H/Z|"
        if comp.dim // vdim != mult:
            return False, "multiplicity %d != |H/Z| = %d" % (
                comp.dim // vdim, mult)
        total += comp.dim
    if total != W.dim:
        return False, "component dims do not add to dim W"
    for i in range(len(dec.isotypic)):
        verdict, _ = is_graded_simple(dec.isotypic[i])
        if verdict is not True:
            return False, "component %d not certified graded simple" % i
        for j in range(i + 1, len(dec.isotypic)):
            status, _ = find_isomorphism(
                dec.isotypic[i], dec.isotypic[j],
                degree=dec.piZ.target.identity)
            if status == "iso":
                return False, "components %d and %d are isomorphic" % (i, j)
    return True, "%d components, multiplicity %d" % (len(dec.isotypic),
                                                     mult)


def check_loop_centralizer(W, F):
    """The loop of the base centralizer equals the delta commutant in
    the graded centralizer of the loop; self-centralizing exactly for
    central bases."""
    ci = central_image(W, F)
    L = loop(ci.module, ci.pi)
    lhs, rhs, equal = centralizer_loop_identity(L)
    if not equal:
        return False, "centralizer identity fails"
    self_centralizing = len(rhs) == ci.pi.kernel.order
    if self_centralizing != is_central(ci.module):
        return False, "self-centralization does not match centrality"
    return True, "dim %d on both sides" % len(rhs)


def check_transitivity(W, F):
    """The explicit chain isomorphism for every K <= H."""
    ci = central_image(W, F)
    G = W.grading_group
    H = F.support
    count = 0
    for K in all_subgroups(G):
        if not all(k in H for k in K.elements):
            continue
        pi = ci.pi
        pi1 = QuotientMap(G, K)
        Himg = Subgroup(pi1.target, [pi1.project(h) for h in H.elements])
        pi2 = QuotientMap(pi1.target, Himg)
        gm, _, _ = transitivity_iso(ci.module, pi, pi1, pi2)
        if not (gm.is_graded() and gm.is_module_map()
                and gm.is_invertible()):
            return False, "chain through |K|=%d fails" % K.order
        count += 1
    return True, "%d chains certified" % count


def check_twist_witness(W, F):
    """Central images over the same subfield have graded isomorphic
    loops, and exhaustive search finds a character twist witness."""
    images = all_central_images(W, F)
    base = images[0]
    for ci in images:
        found = loop_iso_implies_twist(base.module, ci.module, base.pi)
        if found is None:
            return False, "no twist witness for one central image"
    return True, "%d central images matched" % len(images)


def check_envelope(W, F):
    """The envelope pipeline on the central image: succeeds, graded
    simple output containing V, inertia matches the profile of W."""
    V = central_image(W, F).module
    verdict, _ = is_simple_ungraded(V)
    if verdict is not True:
        return False, "central image not certified simple"
    res = graded_envelope(V)
    prof = invariant_profile(res.W)
    if set(prof.inertia) != set(res.inertia):
        return False, "inertia of the envelope disagrees"
    return True, "dim V=%d, dim W=%d, |K|=%d" % (V.dim, res.W.dim,
                                                 len(res.inertia))


PAIR_CHECKS = [
    ("roundtrip", check_roundtrip),
    ("phi_psi", None),            # needs the rng, handled separately
    ("decomposition", check_decomposition),
    ("loop_centralizer", check_loop_centralizer),
    ("transitivity", check_transitivity),
    ("twist_witness", check_twist_witness),
    ("envelope", check_envelope),
]


def run_suite(seed, instances, max_dim=12):
    """Run all property checks over a deterministic corpus.

    Returns (passed, failed, failures) with failures a list of
    (check, instance, detail).
    """
    rng = random.Random(seed)
    passed = 0
    failures = []
    for n in range(instances):
        W, F = random_pair(rng, max_dim)
        for name, fn in PAIR_CHECKS:
            if fn is None:
                ok, detail = check_phi_psi(W, F, rng)
            else:
                ok, detail = fn(W, F)
            if ok:
                passed += 1
            else:
                failures.append((name, n, detail))
        A = random_division_algebra(rng)
        ok, detail = check_isotropic_count(A)
        if ok:
            passed += 1
        else:
            failures.append(("isotropic_count", n, detail))
    return passed, len(failures), failures
