"""Acceptance criteria, each run at its stated tolerance (all exact) and time budget.

Every test prints a single ``[PASS]`` or ``[FAIL]`` line.  Random corpora use fixed seeds.
Run just this module with ``pytest tests/test_acceptance.py -s``.
"""

import random
import time
from itertools import combinations

import pytest

from conftest import hand_sequence, random_pure_word, thm3_word
from torustlk.braid import BraidWord, compose, full_twist, inverse
from torustlk.constructions import seq_b_delta_n, seq_structured3
from torustlk.invariants import thm2_bound, tlk_abs_sum, tlk_formula
from torustlk.linking import linking_matrix
from torustlk.pairs import CommutingPair, StructuredPair3, expand_structured
from torustlk.rewriting import tlk_from_sequence, triple_points, validate_sequence

pytestmark = pytest.mark.acceptance


def report(capsys, number: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


class Corpus:
    """Tensors and sequences produced by criteria 2, 3 and 5, reused by 6 and 8."""

    def __init__(self):
        self.tensors = []
        self.bundles = []


@pytest.fixture(scope="module")
def corpus():
    return Corpus()


def test_c1_hand_encoded_sequence(capsys):
    t0 = time.perf_counter()
    seq = hand_sequence()
    report_ = validate_sequence(seq, full_twist(3, 1) * BraidWord.from_ints(3, [1, 1]))
    points = [(p.sign, p.type) for p in triple_points(seq)]
    elapsed = time.perf_counter() - t0
    want = [(1, (3, 2, 1)), (-1, (1, 2, 3)), (1, (3, 1, 2)), (-1, (2, 1, 3))]
    ok = report_.valid and points == want and elapsed < 1.0
    report(capsys, 1, ok, f"hand-encoded sequence gives {points} in {elapsed:.3f}s")
    assert ok


def test_c2_b_delta_oracle(capsys, corpus):
    rng = random.Random(2)
    t0 = time.perf_counter()
    cases = mismatches = 0
    for m in (3, 4, 5):
        for _ in range(200):
            b = random_pure_word(rng, m, 8)
            for n in (0, 1, 2):
                pair = CommutingPair(b, full_twist(m, n))
                formula = tlk_formula(pair)
                bundle = seq_b_delta_n(b, n)
                seq_tensor, _ = tlk_from_sequence(bundle.seq, pair)
                cases += 1
                mismatches += seq_tensor != formula
                corpus.tensors += [formula, seq_tensor]
                corpus.bundles.append(bundle)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60
    report(capsys, 2, ok, f"{cases} (b, D^n) cases, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def test_c3_structured_oracle(capsys, corpus):
    rng = random.Random(3)
    t0 = time.perf_counter()
    mismatches = 0
    for _ in range(50):
        w = random_pure_word(rng, 3, 6)
        k1, l1, k2, l2 = (rng.randint(-3, 3) for _ in range(4))
        p = StructuredPair3(w, k1, l1, k2, l2)
        pair = expand_structured(p)
        formula = tlk_formula(pair)
        bundle = seq_structured3(p)
        seq_tensor, _ = tlk_from_sequence(bundle.seq, pair)
        mismatches += seq_tensor != formula
        corpus.tensors += [formula, seq_tensor]
        corpus.bundles.append(bundle)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60
    report(capsys, 3, ok, f"50 structured pairs, {mismatches} mismatches, {elapsed:.1f}s")
    assert ok


def _mu_nu(b):
    # recomputed here from the linking matrix, independently of thm2_bound
    m, lk = b.m, linking_matrix(b)
    mu = sum(abs(lk.lk(i, j)) for i, j in combinations(range(1, m + 1), 2))
    nu = 0
    for i, j, k in combinations(range(1, m + 1), 3):
        for x, y in ((lk.lk(i, j), lk.lk(j, k)), (lk.lk(j, k), lk.lk(k, i)), (lk.lk(k, i), lk.lk(i, j))):
            if x * y > 0:
                nu += min(abs(x), abs(y))
    return mu, nu


def test_c4_bound_equality(capsys):
    rng = random.Random(4)
    failures = 0
    for _ in range(200):
        m = rng.choice((3, 4, 5))
        b = random_pure_word(rng, m, 10)
        mu, nu = _mu_nu(b)
        for n in (0, 1, 2, 3):
            total = tlk_abs_sum(tlk_formula(CommutingPair(b, full_twist(m, n))))
            failures += total != 4 * n * (mu * (m - 2) - nu)
    ok = failures == 0
    report(capsys, 4, ok, f"200 words x 4 twists, {failures} failures of sum |Tlk| = 4n(mu(m-2) - nu)")
    assert ok


def test_c5_bound_realized(capsys, corpus):
    rng = random.Random(5)
    t0 = time.perf_counter()
    failures, cases = [], 0
    instance = seq_b_delta_n(BraidWord.from_ints(3, [2, 2]), 1).r3_count
    if instance != 4:
        failures.append(("instance", instance))
    for m in range(3, 7):
        for _ in range(10):
            b = thm3_word(rng, m)
            mu, _ = _mu_nu(b)
            for n in (1, 2):
                bundle = seq_b_delta_n(b, n)
                bound = thm2_bound(b, n)
                values = (bundle.r3_count, 4 * n * (m - 2) * mu, bound.lower_bound, tlk_abs_sum(bundle.tensor))
                cases += 1
                if len(set(values)) != 1:
                    failures.append((b.to_ints(), n, values))
                corpus.tensors.append(bundle.tensor)
                corpus.bundles.append(bundle)
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    report(capsys, 5, ok, f"{cases} cases plus the sigma_2^2 instance (r3 = {instance}), "
                          f"{len(failures)} failures, {elapsed:.1f}s")
    assert ok, failures[:3]


def test_c6_antisymmetry(capsys, corpus):
    bad = sum(not t.is_antisymmetric() for t in corpus.tensors)
    ok = bad == 0 and len(corpus.tensors) > 0
    report(capsys, 6, ok, f"{len(corpus.tensors)} tensors, {bad} not antisymmetric")
    assert ok


def test_c7_linking_suite(capsys):
    rng = random.Random(7)
    problems = []
    for m in range(3, 9):
        for n in (-2, -1, 0, 1, 2, 3):
            lk = linking_matrix(full_twist(m, n))
            if any(lk.lk(i, j) != n for i in range(1, m + 1) for j in range(1, m + 1) if i != j):
                problems.append(("twist", m, n))
    for _ in range(1000):
        m = rng.randint(3, 8)
        u, v = random_pure_word(rng, m, 10), random_pure_word(rng, m, 10)
        lu = linking_matrix(u)  # raises InvariantViolation on a parity failure
        if not lu.is_symmetric():
            problems.append(("symmetric", u.to_ints()))
        if linking_matrix(compose(u, v)) != lu + linking_matrix(v):
            problems.append(("homomorphism", u.to_ints(), v.to_ints()))
        if linking_matrix(inverse(u)) != -lu:
            problems.append(("inverse", u.to_ints()))
    ok = not problems
    report(capsys, 7, ok, f"twist powers m=3..8 and 1000 random pure words, {len(problems)} problems")
    assert ok, problems[:3]


def test_c8_soundness_audit(capsys, corpus):
    t0 = time.perf_counter()
    bad = 0
    for bundle in corpus.bundles:
        bad += not validate_sequence(bundle.seq, bundle.target, audit=True).valid
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and len(corpus.bundles) > 0 and elapsed < 120
    report(capsys, 8, ok, f"{len(corpus.bundles)} sequences audited word by word, {bad} unsound, {elapsed:.1f}s")
    assert ok
