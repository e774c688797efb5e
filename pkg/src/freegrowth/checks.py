"""Batch verification drivers: exhaustive and seeded-random instance
families for each lemma, shared by the ``check`` subcommand and the test
suite."""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .bounds import (
    derived_constant,
    lemma2_dichotomy,
    lemma3_witness,
    lemma4_bound,
    lemma6_check,
    representation_multiplicity,
    theorem_check,
)
from .errors import PreconditionViolation, VerificationFailure
from .extraction import lemma1_extract, size_guarantee, verify_extraction
from .generators import GeneratorConfig, enumerate_texts, random_set, random_text
from .periodicity import left_period_text, lemma5_check, overlap_lemma, suffix_run
from .setops import PowerCache, WordSet
from .strings import has_period, is_primitive
from .words import Word, find_noncommuting_pair, is_cyclically_reduced

# (max word length, max set size) families run by the exhaustive lemma checks
EXHAUSTIVE_FAMILIES = ((5, 1), (3, 2), (2, 3))


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    skipped: int = 0
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0
    min_ratios: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, **instance) -> None:
        self.failures.append(instance)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.stats.items())
        return (
            f"{status} {self.name}: {self.instances} instances, "
            f"{self.skipped} skipped, {len(self.failures)} failures{extra} "
            f"({self.elapsed:.1f}s)"
        )


class _timed:
    def __init__(self, result: CheckResult):
        self.result = result

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.result

    def __exit__(self, *exc):
        self.result.elapsed += time.perf_counter() - self.t0


def _w(t: str, rank: int = 2) -> Word:
    return Word._trusted(t, rank)


def _show(texts: Iterable[str]) -> list[str]:
    return [t or "1" for t in texts]


# -- periods, tails, overlaps ----------------------------------------------

def lemma0_exhaustive(max_length: int = 12, rank: int = 2) -> CheckResult:
    """Over all reduced words up to ``max_length``:

    * a left period exists iff a right period does, with equal lengths,
      and each decomposition reconstructs the word;
    * words with equal left and equal right periods have equal tails;
    * every self-overlap at shift ``d <= |v|/2`` forces a period that the
      later occurrence's prefix ends with.
    """
    res = CheckResult("lemma0")
    with _timed(res):
        tails: dict[tuple[str, str], set[str]] = defaultdict(set)
        overlaps = 0
        for v in enumerate_texts(rank, max_length):
            res.instances += 1
            left = left_period_text(v)
            right = left_period_text(v[::-1])
            if (left is None) != (right is None):
                res.fail(kind="left/right existence", v=v)
                continue
            if left is not None:
                lp, ls, lt = left
                rp, rs, rt = right
                rp, rt = rp[::-1], rt[::-1]
                if len(lp) != len(rp) or lp * ls + lt != v or rt + rp * rs != v:
                    res.fail(kind="decomposition", v=v)
                if not is_primitive(lp) or not is_primitive(rp):
                    res.fail(kind="period not primitive", v=v)
                tails[(lp, rp)].add(lt)
            n = len(v)
            for d in range(1, n // 2 + 1):
                if has_period(v, d):
                    overlaps += 1
                    try:
                        overlap_lemma(_w("", rank), _w(v[:d], rank), _w(v, rank))
                    except (VerificationFailure, PreconditionViolation) as exc:
                        res.fail(kind="overlap", v=v, d=d, error=str(exc))
        for key, ts in tails.items():
            if len(ts) > 1:
                res.fail(kind="tails differ", left_period=key[0], right_period=key[1], tails=sorted(ts))
        res.stats.update(period_groups=len(tails), overlaps=overlaps)
    return res


# -- extraction ------------------------------------------------------------

def lemma1_corpus(count: int = 1000, seed: int = 0, max_size: int = 50, max_length: int = 12) -> list[WordSet]:
    """Seeded random sets, rank 2; instance ``i`` uses seed ``seed + i`` and
    a size drawn from ``1..max_size`` by that same seed."""
    out = []
    for i in range(count):
        size = random.Random(seed + i).randint(1, max_size)
        out.append(random_set(GeneratorConfig(seed + i, 2, max_length, size)))
    return out


def adversarial_lemma1_sets(max_length: int = 4) -> list[WordSet]:
    """Sets aimed at the fall-through and two-class branches."""
    sets = [WordSet.from_texts(enumerate_texts(2, max_length), 2)]
    inner = [t for t in enumerate_texts(2, 3) if t and t[0] != "X" and t[-1] != "x"]
    for depth in (1, 2, 3):
        sets.append(WordSet.from_texts({"x" * depth + t + "X" * depth for t in inner}, 2))
    # nested conjugates of different depth in one set
    sets.append(WordSet.from_texts({"x" * d + "y" * k + "X" * d for d in range(1, 5) for k in range(1, 4)}, 2))
    # two inverse-pair classes whose mean and median lengths disagree
    sets.append(WordSet.from_texts(["xyX", "xYX", "x" + "y" * 99 + "X", "y" + "x" * 9 + "Y", "y" + "X" * 9 + "Y", "yx" + "y" * 7 + "xY"], 2))
    return sets


def lemma1_check(sets: Iterable[WordSet]) -> CheckResult:
    res = CheckResult("lemma1")
    with _timed(res):
        for A in sets:
            res.instances += 1
            r = lemma1_extract(A)
            bound = size_guarantee(A.rank)
            lengths = [s.total_length for s in r.trace]
            if not verify_extraction(A, r):
                res.fail(A=_show(A.sorted_texts()), reason="verify_extraction")
            elif len(r.A0) < bound * len(A) or len(r.B0) < bound * len(A):
                res.fail(A=_show(A.sorted_texts()), reason="size bound")
            elif any(b >= a for a, b in zip(lengths, lengths[1:])):
                res.fail(A=_show(A.sorted_texts()), reason="total length not decreasing")
            res.stats["max_steps"] = max(res.stats.get("max_steps", 0), len(r.trace))
    return res


# -- dichotomy and multiplicity bounds -------------------------------------

def positive_pool(max_length: int, rank: int = 2) -> list[str]:
    """Positive words (no inverse letters) including the identity."""
    return list(enumerate_texts(rank, max_length, positive_only=True))


def subsets(pool: Sequence[str], max_size: int) -> list[tuple[str, ...]]:
    return [c for k in range(1, max_size + 1) for c in combinations(pool, k)]


def _triples(max_length: int, max_size: int, rank: int = 2) -> Iterator[tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]]:
    """All (U, V, W) from the positive pool with every ``|v| >= |u|``."""
    subs = subsets(positive_pool(max_length, rank), max_size)
    by_max: dict[int, list] = defaultdict(list)
    for s in subs:
        by_max[max(map(len, s))].append(s)
    for V in subs:
        lv = min(map(len, V))
        for m in range(lv + 1):
            for U in by_max.get(m, ()):
                for W in subs:
                    yield U, V, W


def _ws(texts: Iterable[str], rank: int = 2) -> WordSet:
    return WordSet.from_texts(texts, rank)


def _run_dichotomy(res: CheckResult, U, V, W, side: str, rank: int = 2) -> None:
    res.instances += 1
    try:
        d = lemma2_dichotomy(_ws(U, rank), _ws(V, rank), _ws(W, rank), side)
    except VerificationFailure as exc:
        res.fail(U=_show(U), V=_show(V), W=_show(W), side=side, error=str(exc))
        return
    except PreconditionViolation:
        res.skipped += 1
        return
    if not d.bound_holds:
        res.stats["period_branch"] = res.stats.get("period_branch", 0) + 1


def lemma2_exhaustive(families: Iterable[tuple[int, int]] = EXHAUSTIVE_FAMILIES, sides=("left", "right")) -> CheckResult:
    res = CheckResult("lemma2-exhaustive")
    with _timed(res):
        for max_length, max_size in families:
            for U, V, W in _triples(max_length, max_size):
                if "left" in sides:
                    _run_dichotomy(res, U, V, W, "left")
                if "right" in sides:
                    # mirrored roles: the long middle factor must beat W
                    _run_dichotomy(res, W, V, U, "right")
    return res


def _random_primitive(rng: random.Random, rank: int, max_len: int, positive: bool = True) -> str:
    while True:
        p = random_text(rng, rank, rng.randint(1, max_len), positive)
        if is_primitive(p) and is_cyclically_reduced(p):
            return p


def random_lemma2_instance(rng: random.Random, rank: int = 2) -> tuple[list[str], list[str], list[str]]:
    """Positive-word instance with ``|v| >= |u|``.

    Half the instances are built from powers of one primitive word so the
    product set is small and the common-period branch is reached.
    """
    if rng.random() < 0.5:
        n_u, n_w = rng.randint(1, 10), rng.randint(1, 10)
        U = {random_text(rng, rank, rng.randint(0, 6), True) for _ in range(n_u)}
        lu = max(map(len, U))
        V = {random_text(rng, rank, rng.randint(max(lu, 1), lu + 4), True) for _ in range(rng.randint(1, 3))}
        W = {random_text(rng, rank, rng.randint(0, 6), True) for _ in range(n_w)}
        return sorted(U), sorted(V), sorted(W)
    p = _random_primitive(rng, rank, 3)
    prefixes = [p[:i] for i in range(len(p))]
    suffixes = [p[i:] for i in range(1, len(p))]
    top = rng.randint(6, 48)

    def powers(decorations: list[str], front: bool) -> set[str]:
        exps = rng.sample(range(top + 1), rng.randint(1 + top // 3, top + 1))
        out = set()
        for e in exps:
            extra = rng.choice(decorations) if decorations and rng.random() < 0.2 else ""
            out.add(extra + p * e if front else p * e + extra)
        return out

    U = powers(suffixes, front=True)
    lu = max(map(len, U))
    n_min = max(2, -(-lu // len(p)) + rng.randint(0, 2))
    tail = rng.choice(prefixes)
    V = {p * (n_min + rng.randint(0, 4)) + tail for _ in range(rng.randint(1, 3))}
    if rng.random() < 0.2:
        # break the common period with one foreign word
        q = _random_primitive(rng, rank, 3)
        V.add(q * (-(-lu // len(q)) + 2))
    if rng.random() < 0.2:
        V.add(p * (n_min + rng.randint(0, 4)) + rng.choice(prefixes))
    W = powers(prefixes[1:], front=False)
    return sorted(U), sorted(V), sorted(W)


def lemma2_random(count: int = 10_000, seed: int = 0) -> CheckResult:
    res = CheckResult("lemma2-random")
    with _timed(res):
        for i in range(count):
            rng = random.Random(seed + i)
            U, V, W = random_lemma2_instance(rng)
            if i % 2:
                # right variant: mirror the instance so |v| >= |w| holds
                rev = lambda xs: sorted(x[::-1] for x in xs)  # noqa: E731
                _run_dichotomy(res, rev(W), rev(V), rev(U), "right")
            else:
                _run_dichotomy(res, U, V, W, "left")
    return res


def _multiplicity_instance(res: CheckResult, U, v: str, W, rank: int = 2) -> None:
    res.instances += 1
    Us, Ws, vw = _ws(U, rank), _ws(W, rank), _w(v, rank)
    report = representation_multiplicity(Us, vw, Ws)
    if not report.all_reduced:
        res.skipped += 1
        return
    dec = left_period_text(v)
    lemma4_applies = dec is None or not any(u.endswith(dec[0]) for u in U)
    if lemma4_applies:
        res.stats["lemma4_instances"] = res.stats.get("lemma4_instances", 0) + 1
        if report.max_multiplicity > 2:
            res.fail(U=_show(U), v=v or "1", W=_show(W), reason="multiplicity > 2 although v has no period ending an element of U")
        elif not lemma4_bound(Us, vw, Ws):
            res.fail(U=_show(U), v=v or "1", W=_show(W), reason="lemma4_bound returned False")
    if report.max_multiplicity >= 3:
        res.stats["triple_representations"] = res.stats.get("triple_representations", 0) + 1
        try:
            found = lemma3_witness(Us, vw, Ws)
        except VerificationFailure as exc:
            res.fail(U=_show(U), v=v or "1", W=_show(W), reason=str(exc))
            return
        if found is None:
            res.fail(U=_show(U), v=v or "1", W=_show(W), reason="witness missing")
            return
        period, witness = found
        if not witness.endswith(period) or witness.text not in U or left_period_text(v)[0] != period.text:
            res.fail(U=_show(U), v=v or "1", W=_show(W), reason="invalid witness")


def multiplicity_exhaustive(families: Iterable[tuple[int, int]] = EXHAUSTIVE_FAMILIES) -> CheckResult:
    """Criterion-4 families with ``V`` split into singletons."""
    res = CheckResult("lemma3/4-exhaustive")
    seen = set()
    with _timed(res):
        for max_length, max_size in families:
            for U, V, W in _triples(max_length, max_size):
                for v in V:
                    key = (U, v, W)
                    if key in seen:
                        continue
                    seen.add(key)
                    _multiplicity_instance(res, U, v, W)
    return res


def multiplicity_random(count: int = 10_000, seed: int = 0) -> CheckResult:
    res = CheckResult("lemma3/4-random")
    with _timed(res):
        for i in range(count):
            rng = random.Random(seed + i)
            U, V, W = random_lemma2_instance(rng)
            for v in V:
                _multiplicity_instance(res, U, v, W)
    return res


# -- suffix runs -----------------------------------------------------------

def primitive_cyclic_words(rank: int, max_length: int) -> list[str]:
    return [
        t for t in enumerate_texts(rank, max_length)
        if t and is_cyclically_reduced(t) and is_primitive(t)
    ]


def _hosts(square: str, rank: int, max_length: int) -> list[str]:
    """Reduced words of length <= max_length ending with ``square``."""
    room = max_length - len(square)
    if room < 0:
        return []
    bad = square[0].swapcase()
    return [p + square for p in enumerate_texts(rank, room) if not p or p[-1] != bad]


def lemma5_exhaustive(max_period: int = 4, host_length: int = 14, rank: int = 2) -> CheckResult:
    """For each admissible (alpha, beta) the pairwise statement over all
    hosts reduces to ``min_b run(b) >= max_a run(a)`` of alpha-runs at the
    end; the extreme pair is passed through :func:`lemma5_check`."""
    res = CheckResult("lemma5")
    with _timed(res):
        prims = primitive_cyclic_words(rank, max_period)
        for beta in prims:
            hosts = _hosts(beta * 2, rank, host_length)
            for alpha in prims:
                if len(alpha) >= len(beta):
                    continue
                runs = [(suffix_run(h, alpha), h) for h in hosts]
                positive = [r for r in runs if r[0] >= 1]
                if not positive:
                    res.skipped += 1
                    continue
                res.instances += 1
                res.stats["pairs_covered"] = res.stats.get("pairs_covered", 0) + len(positive) * len(runs)
                s_max, a = max(positive)
                _, b = min(runs)
                ok = lemma5_check(_w(alpha, rank), _w(beta, rank), _w(a, rank), _w(b, rank))
                if not ok:
                    res.fail(alpha=alpha, beta=beta, a=a, b=b, s=s_max)
    return res


# -- shifted periods -------------------------------------------------------

def random_lemma6_instance(rng: random.Random, rank: int = 2):
    p = _random_primitive(rng, rank, 3)
    q = rng.randint(1, 3)
    U = set()
    for _ in range(rng.randint(1, 8)):
        while True:
            pre = random_text(rng, rank, rng.randint(0, 5), True)
            if not pre.endswith(p):
                break
        U.add(pre + p * q)
    lu = max(map(len, U))
    tail = p[: rng.randint(0, len(p) - 1)]
    reps = max(2, -(-(lu - len(tail)) // len(p)))
    v = p * (reps + rng.randint(0, 2)) + tail
    W = {random_text(rng, rank, rng.randint(0, 6), True) for _ in range(rng.randint(1, 8))}
    return sorted(U), v, sorted(W), q


def lemma6_random(count: int = 2000, seed: int = 0) -> CheckResult:
    res = CheckResult("lemma6")
    with _timed(res):
        for i in range(count):
            U, v, W, q = random_lemma6_instance(random.Random(seed + i))
            res.instances += 1
            try:
                ok = lemma6_check(_ws(U), _w(v), _ws(W), q)
            except VerificationFailure as exc:
                res.fail(U=_show(U), v=v, W=_show(W), q=q, error=str(exc))
                continue
            except PreconditionViolation:
                res.skipped += 1
                continue
            if not ok:
                res.fail(U=_show(U), v=v, W=_show(W), q=q)
    return res


# -- the growth bound ------------------------------------------------------

def theorem_corpus(sets: Iterable[WordSet], ns: Sequence[int] = (3,), max_base_for: dict[int, int] | None = None) -> CheckResult:
    """``|A^n| >= c_n |A|^floor((n+1)/2)`` with the composed constant, for
    every set holding a non-commuting pair.

    ``max_base_for`` limits large exponents to sets of bounded size.
    """
    res = CheckResult("theorem")
    limits = max_base_for or {}
    mins: dict[int, Fraction] = {}
    branches: dict[str, int] = defaultdict(int)
    with _timed(res):
        for A in sets:
            if find_noncommuting_pair(A) is None:
                res.skipped += 1
                continue
            cache = PowerCache(A)
            for n in ns:
                if n in limits and len(A) > limits[n]:
                    continue
                res.instances += 1
                rep = theorem_check(A, n, cache=cache)
                branches[rep.branch] += 1
                if not rep.bound_ok:
                    res.fail(A=_show(A.sorted_texts()), n=n, size=rep.size)
                if n not in mins or rep.ratio < mins[n]:
                    mins[n] = rep.ratio
        for n, r in mins.items():
            c = derived_constant(n)
            res.stats[f"min_ratio_n{n}"] = f"{float(r):.4g}"
            if not r > c:
                res.fail(n=n, reason=f"empirical min ratio {r} does not exceed {c}")
        res.stats["branches"] = dict(branches)
    res.min_ratios = mins
    return res

