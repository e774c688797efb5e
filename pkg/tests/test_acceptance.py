"""Acceptance criteria 1-9.

Each test prints one ``PASS``/``FAIL`` line (shown even without ``-s``)
and then asserts.  Run alone with::

    pytest tests/test_acceptance.py -v
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from freegrowth import checks
from freegrowth.bounds import derived_constant
from freegrowth.generators import GeneratorConfig, extremal_family, random_set
from freegrowth.setops import PowerCache, naive_power, power

from conftest import naive_reduce


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return emit


@pytest.fixture(scope="module")
def corpus():
    return checks.lemma1_corpus(1000, seed=0)


def test_criterion_1_extremal_cube(report):
    t0 = time.perf_counter()
    bad = [k for k in range(1, 31) if len(power(extremal_family(k), 3)) != k * k + 10 * k - 3]
    for k in range(1, 7):
        A = extremal_family(k)
        brute = {naive_reduce("".join(t)) for t in itertools.product(A.texts, repeat=3)}
        if len(brute) != k * k + 10 * k - 3:
            bad.append(("naive", k))
    elapsed = time.perf_counter() - t0
    report(1, not bad and elapsed < 5, f"|A_k^3| = k^2+10k-3 for k=1..30, mismatches={bad}, {elapsed:.2f}s (limit 5s)")


def test_criterion_2_extremal_order(report):
    t0 = time.perf_counter()
    ratios = {}
    for k in range(1, 16):
        cache = PowerCache(extremal_family(k))
        for n in range(1, 7):
            ratios[n, k] = Fraction(len(cache.get(n)), k ** ((n + 1) // 2))
    bad = [n for n in range(1, 7) if ratios[n, 15] > ratios[n, 5] * Fraction(11, 10)]
    worst = {n: max(ratios[n, k] for k in range(1, 16)) for n in range(1, 7)}
    elapsed = time.perf_counter() - t0
    maxes = ", ".join(f"n={n}:{float(worst[n]):.3f}" for n in range(1, 7))
    report(2, not bad and elapsed < 60, f"ratio(k=15) <= 1.1*ratio(k=5) for n=1..6, failing n={bad}; max ratios {maxes}; {elapsed:.2f}s (limit 60s)")


def test_criterion_3_lemma1(report, corpus):
    res = checks.lemma1_check(corpus + checks.adversarial_lemma1_sets(4))
    report(3, res.ok and res.elapsed < 30, f"{res.summary()} (limit 30s)")


def test_criterion_4_lemma2(report):
    ex = checks.lemma2_exhaustive()
    rnd = checks.lemma2_random(10_000, seed=0)
    elapsed = ex.elapsed + rnd.elapsed
    ok = ex.ok and rnd.ok and elapsed < 120
    report(4, ok, f"{ex.summary()}; {rnd.summary()}; total {elapsed:.1f}s (limit 120s)")


def test_criterion_5_multiplicity(report):
    ex = checks.multiplicity_exhaustive()
    rnd = checks.multiplicity_random(10_000, seed=0)
    report(5, ex.ok and rnd.ok, f"{ex.summary()}; {rnd.summary()}")


def test_criterion_6_lemma0(report):
    res = checks.lemma0_exhaustive(12)
    report(6, res.ok and res.elapsed < 60, f"{res.summary()} (limit 60s)")


def test_criterion_7_lemma5(report):
    res = checks.lemma5_exhaustive(4, 14)
    report(7, res.ok, res.summary())


def test_criterion_8_theorem(report, corpus):
    res = checks.theorem_corpus(corpus, (3, 5), max_base_for={5: 16})
    c3, c5 = derived_constant(3), derived_constant(5)
    mins = res.min_ratios
    ok = res.ok and mins[3] > c3 and mins[5] > c5
    report(8, ok, f"{res.summary()}; min |A^3|/|A|^2 = {mins[3]} > {c3}, min |A^5|/|A|^3 = {mins[5]} > {c5}")


def test_criterion_9_power_oracle(report):
    bad = []
    for seed in range(50):
        rng = random.Random(seed)
        A = random_set(GeneratorConfig(seed, 2, rng.randint(2, 6), rng.randint(1, 8)))
        for n in range(1, 5):
            if power(A, n) != naive_power(A, n):
                bad.append((seed, n))
    report(9, not bad, f"power == naive fold on 50 sets, n<=4, mismatches={bad}")
