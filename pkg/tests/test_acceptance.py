"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to see a PASS/FAIL line per criterion
in the terminal summary.
"""
import itertools
import random
import time

import numpy as np

from primemub.errors import CollectionFullError
from primemub.heisenberg import p_matrix, q_matrix, schwinger_inner
from primemub.mub import (
    ComplexBasis,
    MubCollection,
    basis_equivalent,
    build_formula_bases,
    build_operator_bases,
    exact_unbiased_bases,
    gauss_sum,
    unbiasedness_matrix,
)
from primemub.phasespace import (
    PhasePoint,
    SL2Matrix,
    act,
    class_partition,
    pair_determinant,
    points,
    shear_a1,
    shear_a2,
    sl2_enumerate,
    transport_matrix,
)
from primemub.unitary import conjugate, coset_identify, phi_of, random_word, sylvester, word_unitary
from primemub.heisenberg import weyl_matrix
from primemub.zmod import Residue

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
ODD_PRIMES = PRIMES[1:]


def _offdiag_max(dev):
    k = dev.shape[0]
    return float(dev[~np.eye(k, dtype=bool)].max())


def _by_label(coll, label):
    hits = [b for b, lab in zip(coll.bases, coll.labels) if lab.as_tuple() == label]
    assert len(hits) == 1
    return hits[0]


def test_criterion_01_operator_construction_maximal(report):
    start = time.perf_counter()
    worst = 0.0
    for n in PRIMES:
        coll = build_operator_bases(n)
        assert len(coll) == n + 1
        worst = max(worst, _offdiag_max(unbiasedness_matrix(coll.bases)))
    elapsed = time.perf_counter() - start
    report(1, f"operator chain gives N+1 MUBs for N<=31, max deviation {worst:.2e} (<1e-10), "
              f"{elapsed:.2f} s (<10 s)")
    assert worst < 1e-10
    assert elapsed < 10


def test_criterion_02_formula_construction_numeric_and_exact(report):
    worst = 0.0
    pairs = 0
    for n in ODD_PRIMES:
        coll = build_formula_bases(n)
        assert len(coll) == n + 1
        worst = max(worst, _offdiag_max(unbiasedness_matrix(coll.bases)))
        for x, y in itertools.combinations(coll.bases, 2):
            ok = exact_unbiased_bases(x, y)
            assert ok.all(), f"exact test failed at N={n}"
            pairs += ok.size
    s = 1 / np.sqrt(2)
    pauli = [np.eye(2), np.array([[s, s], [s, -s]]), np.array([[s, s], [1j * s, -1j * s]])]
    got = [b.to_complex().columns for b in build_formula_bases(2).bases]
    n2_equal = len(got) == 3 and all(np.array_equal(g, e) for g, e in zip(got, pauli))
    report(2, f"formula bases odd N<=31: max deviation {worst:.2e}, {pairs} vector pairs exactly "
              f"unbiased; N=2 triple entrywise equal: {n2_equal}")
    assert worst < 1e-10
    assert n2_equal


def test_criterion_03_constructions_agree(report):
    for n in PRIMES:
        formula, operator = build_formula_bases(n), build_operator_bases(n)
        for label in [(1, 0), (0, 1)]:
            assert basis_equivalent(_by_label(formula, label), _by_label(operator, label), tol=1e-8)
    f2, o2 = build_formula_bases(2).bases, build_operator_bases(2).bases
    unmatched = list(o2)
    for fb in f2:
        hit = [ob for ob in unmatched if basis_equivalent(fb, ob, tol=1e-8)]
        assert len(hit) == 1
        unmatched.remove(hit[0])
    report(3, "canonical and Fourier bases agree across constructions for all tested primes; "
              "N=2 operator chain reproduces all three Pauli eigenbases")


def test_criterion_04_algebraic_core(report):
    worst = 0.0
    for n in range(2, 32):
        q, p, s = q_matrix(n), p_matrix(n), sylvester(n)
        w = np.exp(2j * np.pi / n)
        s_inv = np.linalg.inv(s)
        worst = max(
            worst,
            np.max(np.abs(p @ q - w * q @ p)),
            np.max(np.abs(s_inv @ p @ s - q)),
            np.max(np.abs(s_inv @ q @ s - np.linalg.inv(p))),
        )
    schwinger = 0.0
    count = 0
    for n in (2, 3, 5):
        for a, b, c, d in itertools.product(range(n), repeat=4):
            expected = n if (a, b) == (c, d) else 0
            got = schwinger_inner(*(Residue(v, n) for v in (a, b, c, d)))
            schwinger = max(schwinger, abs(got - expected))
            count += 1
    report(4, f"PQ=wQP and Fourier conjugations for N<=31: {worst:.2e} (<1e-12); "
              f"trace orthogonality over {count} quadruples: {schwinger:.2e} (<1e-10)")
    assert worst < 1e-12
    assert schwinger < 1e-10


def test_criterion_05_phi_isomorphism(report):
    rng = random.Random(5)
    words = 0
    actions = 0
    for n in (3, 5, 7):
        for _ in range(200):
            x = word_unitary(n, random_word(rng))
            y = word_unitary(n, random_word(rng))
            px, py, pxy = phi_of(x), phi_of(y), phi_of(x @ y)
            for m in (px, py, pxy):
                a, b, c, d = m.as_tuple()
                assert (a * d - b * c) % n == 1
            assert pxy == px * py
            words += 1
        for _ in range(50):
            x = word_unitary(n, random_word(rng, max_len=12))
            m = phi_of(x)
            for pt in points(n, include_zero=True):
                image, _ = coset_identify(conjugate(weyl_matrix(n, *pt.as_tuple()), x))
                assert image == act(pt, m)
                actions += 1
    report(5, f"phi homomorphism on {words} word pairs (N=3,5,7), all determinants 1, "
              f"{actions} action-compatibility identities")


def test_criterion_06_determinant_invariance(report):
    rng = random.Random(6)
    total = 0
    for n in (3, 5, 7, 11):
        group = sl2_enumerate(n)
        for _ in range(1000):
            p = PhasePoint.of(n, rng.randrange(n), rng.randrange(n))
            q = PhasePoint.of(n, rng.randrange(n), rng.randrange(n))
            m = rng.choice(group)
            assert pair_determinant(act(p, m), act(q, m)) == pair_determinant(p, q)
            total += 1
    report(6, f"pair determinant invariant on {total} random triples (N=3,5,7,11), exact")


def test_criterion_07_class_partition(report):
    for n in PRIMES:
        parts = class_partition(n)
        assert len(parts) == n + 1
        assert all(len(m) == n - 1 for m in parts.values())
        covered = set().union(*map(set, parts.values()))
        assert covered == set(points(n)) and len(covered) == n * n - 1
    report(7, "N+1 classes of N-1 points covering all N^2-1 nonzero points, primes <= 31")


def test_criterion_08_sl2_order(report):
    for n in (2, 3, 5, 7):
        assert len(sl2_enumerate(n)) == n * (n * n - 1)
    listed = {(1, 0, 0, 1), (0, 1, 1, 0), (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 0), (0, 1, 1, 1)}
    assert {m.as_tuple() for m in sl2_enumerate(2)} == listed
    report(8, "|SL(2,Z_N)| = N(N^2-1) for N=2,3,5,7; N=2 gives the six listed matrices")


def test_criterion_09_gauss_sums(report):
    worst = 0.0
    for p in (3, 5, 7, 11, 13):
        for a in range(1, p):
            for b in range(p):
                worst = max(worst, abs(abs(gauss_sum(a, b, p)) - np.sqrt(p)))
    report(9, f"|gauss sum| = sqrt(p) within {worst:.2e} (<1e-12); note: 1/sqrt(p) holds only "
              "for the sum divided by p, not the raw sum")
    assert worst < 1e-12


def test_criterion_10_transport_machinery(report):
    checked = 0
    for n in (3, 5, 7, 11):
        for a, b in itertools.permutations(range(n), 2):
            m = transport_matrix(PhasePoint.of(n, a, 1), PhasePoint.of(n, b, 1))
            assert act(PhasePoint.of(n, a, 1), m) == PhasePoint.of(n, a - b, 0)
            assert act(PhasePoint.of(n, b, 1), m) == PhasePoint.of(n, 0, 1)
            checked += 1
        for b in range(n):
            a1 = shear_a1(Residue(b, n))
            assert act(PhasePoint.of(n, b, 1), a1) == PhasePoint.of(n, 0, 1)
            assert act(PhasePoint.of(n, 1, 0), a1) == PhasePoint.of(n, 1, 0)
            checked += 1
            if b:
                a2 = shear_a2(Residue(b, n))
                assert act(PhasePoint.of(n, b, 1), a2) == PhasePoint.of(n, b, 0)
                assert act(PhasePoint.of(n, 0, 1), a2) == PhasePoint.of(n, 0, 1)
                checked += 1
        for m in [transport_matrix(PhasePoint.of(n, 1, 1), PhasePoint.of(n, 0, 1)),
                  shear_a1(Residue(2, n)), shear_a2(Residue(2, n))]:
            a_, b_, c_, d_ = m.as_tuple()
            assert isinstance(m, SL2Matrix) and (a_ * d_ - b_ * c_) % n == 1
    report(10, f"transport and shear matrices satisfy their image equations ({checked} cases), det 1")


def test_criterion_11_collection_bound(report):
    n = 5
    coll = build_operator_bases(n)
    refused = False
    try:
        coll.add(ComplexBasis(np.eye(n)))
    except CollectionFullError:
        refused = True
    report(11, f"collection of N+1={n + 1} bases refuses an extra basis: {refused}")
    assert refused
    assert len(coll) == n + 1
    try:
        MubCollection(2, bases=[ComplexBasis(np.eye(2))] * 4)
        refused_init = False
    except CollectionFullError:
        refused_init = True
    assert refused_init
