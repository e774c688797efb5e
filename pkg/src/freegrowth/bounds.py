"""Executable checks of the counting lemmas and the power-growth bound.

Every checker separates two kinds of failure: a
:class:`~freegrowth.errors.PreconditionViolation` means the statement does
not apply to the input, a :class:`~freegrowth.errors.VerificationFailure`
means it applied and its conclusion was false.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal

from .errors import PreconditionViolation, VerificationFailure
from .extraction import ExtractionResult, lemma1_extract, size_guarantee
from .periodicity import Side, left_period, left_period_text
from .setops import DEFAULT_CAP, PowerCache, WordSet, floor_exponent, power, product
from .words import Word, commutes, concat_text, find_noncommuting_pair, reduce_text

LEMMA2_FACTOR = Fraction(1, 6)
LEMMA4_FACTOR = Fraction(1, 2)


def _texts(S: WordSet | Iterable[Word]) -> list[str]:
    if isinstance(S, WordSet):
        return list(S.sorted_texts())
    return [w.text for w in S]


def _instance(**sets) -> dict:
    out = {}
    for name, val in sets.items():
        if isinstance(val, WordSet):
            out[name] = [t or "1" for t in val.sorted_texts()]
        elif isinstance(val, Word):
            out[name] = str(val)
        else:
            out[name] = val
    return out


# -- multiplicities --------------------------------------------------------

@dataclass
class MultiplicityReport:
    counts: Counter
    all_reduced: bool
    representations: dict[str, list[tuple[str, str]]] = field(repr=False, default_factory=dict)

    @property
    def max_multiplicity(self) -> int:
        return max(self.counts.values(), default=0)

    def multiplicity(self, w: Word) -> int:
        return self.counts.get(w.text, 0)

    def elements(self) -> int:
        return len(self.counts)


def representation_multiplicity(U: WordSet, v: Word, W: WordSet) -> MultiplicityReport:
    """Count, for each element of ``UvW``, the pairs ``(u, w)`` producing it."""
    counts: Counter = Counter()
    reps: dict[str, list[tuple[str, str]]] = {}
    all_reduced = True
    vt = v.text
    for u in _texts(U):
        uv = concat_text(u, vt)
        for w in _texts(W):
            g = concat_text(uv, w)
            if len(g) != len(u) + len(vt) + len(w):
                all_reduced = False
            counts[g] += 1
            reps.setdefault(g, []).append((u, w))
    return MultiplicityReport(counts, all_reduced, reps)


def _require_reduced(U: list[str], V: list[str], W: list[str]) -> None:
    # u v w is reduced iff both junctions are, provided v is nonempty; an
    # empty v glues u to w directly.
    for v in V:
        for u in U:
            uv = concat_text(u, v)
            if len(uv) != len(u) + len(v):
                raise PreconditionViolation(f"product {u or 1}*{v or 1} cancels")
            for w in W:
                if len(concat_text(uv, w)) != len(uv) + len(w):
                    raise PreconditionViolation(f"product {u or 1}*{v or 1}*{w or 1} cancels")


def _require_long(V: list[str], X: list[str], label: str) -> None:
    if X and V and min(map(len, V)) < max(map(len, X)):
        raise PreconditionViolation(f"need |v| >= |{label}| for all v and {label}")


def lemma3_witness(U: WordSet, v: Word, W: WordSet) -> tuple[Word, Word] | None:
    """If some element of ``UvW`` has three or more representations, return
    ``(period of v, u)`` with ``u`` a representing prefix ending in that
    period; ``None`` if every element has at most two."""
    Ut, Wt = _texts(U), _texts(W)
    _require_reduced(Ut, [v.text], Wt)
    _require_long([v.text], Ut, "u")
    report = representation_multiplicity(U, v, W)
    if report.max_multiplicity <= 2:
        return None
    dec = left_period(v)
    for g in sorted(report.counts, key=lambda t: (len(t), t)):
        reps = report.representations[g]
        if len(reps) < 3:
            continue
        us = sorted({u for u, _ in reps}, key=len)
        witness = None
        if dec is not None:
            witness = next((u for u in us if u.endswith(dec.period.text)), None)
        if witness is None:
            raise VerificationFailure(
                "three representations without a periodic witness",
                _instance(U=U, v=v, W=W, element=g or "1"),
            )
        return dec.period, Word._trusted(witness, v.rank)
    raise AssertionError("unreachable")


def lemma4_bound(U: WordSet, v: Word, W: WordSet) -> bool:
    """``2 |UvW| >= |U| |W|`` when ``v`` is aperiodic or no ``u`` ends with
    the period of ``v``."""
    Ut, Wt = _texts(U), _texts(W)
    _require_reduced(Ut, [v.text], Wt)
    _require_long([v.text], Ut, "u")
    dec = left_period(v)
    if dec is not None:
        p = dec.period.text
        bad = [u for u in Ut if u.endswith(p)]
        if bad:
            raise PreconditionViolation(
                f"v={v} has period {p} and u={bad[0] or 1} ends with it"
            )
    size = len({concat_text(concat_text(u, v.text), w) for u in Ut for w in Wt})
    return 2 * size >= len(Ut) * len(Wt)


def lemma6_check(U: WordSet, v: Word, W: WordSet, q: int) -> bool:
    """``2 |UvW| >= |U| |W|`` when every ``u`` ends with exactly ``q``
    copies of the period of ``v``.

    Shifting ``p^q`` from the end of each ``u`` onto the front of ``v``
    gives an instance of :func:`lemma4_bound` with the same product set;
    both sizes are computed and must agree.
    """
    if q < 1:
        raise PreconditionViolation("q must be >= 1")
    Ut, Wt = _texts(U), _texts(W)
    _require_reduced(Ut, [v.text], Wt)
    _require_long([v.text], Ut, "u")
    dec = left_period(v)
    if dec is None:
        raise PreconditionViolation(f"v={v} is not periodic")
    p = dec.period.text
    block = p * q
    for u in Ut:
        if not u.endswith(block) or u.endswith(block + p):
            raise PreconditionViolation(f"u={u or 1} does not end with exactly {q} copies of {p}")
    shifted_U = WordSet.from_texts({u[: len(u) - len(block)] for u in Ut}, U.rank)
    shifted_v = Word._trusted(block + v.text, v.rank)
    direct = len({concat_text(concat_text(u, v.text), w) for u in Ut for w in Wt})
    try:
        via = lemma4_bound(shifted_U, shifted_v, W)
    except PreconditionViolation as exc:
        raise VerificationFailure(
            f"shifted instance left the scope of the multiplicity bound: {exc}",
            _instance(U=U, v=v, W=W, q=q),
        ) from exc
    ok = 2 * direct >= len(Ut) * len(Wt)
    if ok != via:
        raise VerificationFailure("shifted instance disagrees", _instance(U=U, v=v, W=W, q=q))
    return ok


# -- the dichotomy ---------------------------------------------------------

@dataclass(frozen=True)
class Dichotomy:
    """Outcome of the ``|UVW|`` vs. common-period dichotomy.

    ``bound_holds`` and ``period`` may both be set; at least one is.
    """

    size: int
    threshold: Fraction
    bound_holds: bool
    period: Word | None
    side: Side

    @property
    def outcome(self) -> Literal["bound", "period"]:
        return "bound" if self.bound_holds else "period"

    @property
    def both(self) -> bool:
        return self.bound_holds and self.period is not None


def common_left_period(V: Iterable[str]) -> str | None:
    period = None
    for v in V:
        found = left_period_text(v)
        if found is None:
            return None
        if period is None:
            period = found[0]
        elif found[0] != period:
            return None
    return period


def _left_dichotomy(Ut: list[str], Vt: list[str], Wt: list[str], rank: int) -> Dichotomy:
    _require_reduced(Ut, Vt, Wt)
    _require_long(Vt, Ut, "u")
    size = len({u + v + w for u in Ut for v in Vt for w in Wt})
    threshold = LEMMA2_FACTOR * len(Ut) * len(Wt)
    holds = size >= threshold
    period = common_left_period(Vt) if Vt else None
    if not holds and period is None:
        raise VerificationFailure(
            f"|UVW| = {size} < |U||W|/6 = {threshold} and V has no common period",
            {"U": [t or "1" for t in Ut], "V": [t or "1" for t in Vt], "W": [t or "1" for t in Wt]},
        )
    return Dichotomy(size, threshold, holds, None if period is None else Word._trusted(period, rank), "left")


def lemma2_dichotomy(U: WordSet, V: WordSet, W: WordSet, side: Side = "left") -> Dichotomy:
    """Either ``6 |UVW| >= |U| |W|`` or all of ``V`` shares one period.

    ``side="left"`` needs every ``v`` at least as long as every ``u`` and
    looks for a common left period; ``side="right"`` needs ``|v| >= |w|``
    and looks for a common right period.  The right variant runs the left
    one on reversed words with ``U`` and ``W`` swapped.
    """
    Ut, Vt, Wt = _texts(U), _texts(V), _texts(W)
    if side == "left":
        return _left_dichotomy(Ut, Vt, Wt, V.rank)
    if side != "right":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    rev = lambda xs: [x[::-1] for x in xs]  # noqa: E731
    try:
        d = _left_dichotomy(rev(Wt), rev(Vt), rev(Ut), V.rank)
    except VerificationFailure as exc:
        raise VerificationFailure(
            str(exc), _instance(U=U, V=V, W=W, side="right")
        ) from exc
    period = None if d.period is None else Word._trusted(d.period.text[::-1], V.rank)
    return Dichotomy(d.size, d.threshold, d.bound_holds, period, "right")


# -- star form and free generation ----------------------------------------

@dataclass(frozen=True)
class StarForm:
    """``B = {p^n1 t, p^n2 t, ...}`` with ``t`` a proper prefix of ``p``."""

    p: Word
    t: Word
    exponents: tuple[int, ...]

    def members(self) -> list[Word]:
        return [Word._trusted(self.p.text * n + self.t.text, self.p.rank) for n in self.exponents]


def star_case(B: WordSet) -> StarForm | None:
    if not len(B):
        raise ValueError("star form of an empty set is undefined")
    p = t = None
    exps = []
    for text in B.sorted_texts():
        found = left_period_text(text)
        if found is None:
            return None
        period, s, tail = found
        if p is None:
            p, t = period, tail
        elif (period, tail) != (p, t):
            return None
        exps.append(s)
    return StarForm(Word._trusted(p, B.rank), Word._trusted(t, B.rank), tuple(exps))


def free_generation_check(a: Word, b: Word, n: int, S: Iterable[str]) -> bool:
    """Substitute ``a``, ``b`` into formal words ``S`` over the letters
    ``a, A, b, B`` (upper case = inverse) and confirm that formally distinct
    reduced expressions stay distinct.

    ``n`` bounds the syllable count of each expression.
    """
    if commutes(a, b):
        raise PreconditionViolation(f"{a} and {b} commute")
    images = {"a": a.text, "b": b.text, "A": (~a).text, "B": (~b).text}
    formal = set()
    for expr in S:
        if expr == "1":
            expr = ""
        if set(expr) - set(images):
            raise ValueError(f"formal word {expr!r} uses letters outside a, b")
        red = reduce_text(expr)
        syllables = sum(1 for i, ch in enumerate(red) if i == 0 or ch != red[i - 1])
        if syllables > n:
            raise PreconditionViolation(f"{expr!r} has {syllables} syllables > {n}")
        formal.add(red)
    values = set()
    for f in formal:
        g = ""
        for ch in f:
            g = concat_text(g, images[ch])
        values.add(g)
    if len(values) != len(formal):
        raise VerificationFailure(
            f"{len(formal)} formal words collapsed to {len(values)} elements",
            {"a": str(a), "b": str(b), "S": sorted(formal)},
        )
    return True


# -- the growth bound ------------------------------------------------------

Branch = Literal["star-t-empty", "star-t-nonempty", "nonstar-induction"]


def derived_constant(n: int, rank: int = 2) -> Fraction:
    """Constant obtained by composing the per-step factors of the growth
    argument: ``(1/6)^k (1/62)^(k+1)`` for ``n = 2k + 1`` in rank 2.

    Even ``n`` inherits the constant of ``n - 1``: ``a A^(n-1)`` is a subset
    of ``A^n`` for any ``a`` in ``A``, and both share the same target
    exponent ``floor((n+1)/2)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        n -= 1
    k = (n - 1) // 2
    return LEMMA2_FACTOR**k * size_guarantee(rank) ** (k + 1)


@dataclass
class TheoremReport:
    n: int
    base_size: int
    size: int
    floor_exponent: int
    ratio: Fraction
    branch: Branch
    derived_constant: Fraction
    bound_ok: bool
    extraction: ExtractionResult = field(repr=False)
    dichotomy: Dichotomy | None = None


def theorem_check(
    A: WordSet, n: int, cap: int = DEFAULT_CAP, cache: PowerCache | None = None
) -> TheoremReport:
    """Compute ``|A^n|`` exactly and compare with ``c_n |A|^floor((n+1)/2)``,
    labelling which branch of the growth argument the set falls in."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if find_noncommuting_pair(A) is None:
        raise PreconditionViolation("A lies in a cyclic subgroup")
    ext = lemma1_extract(A)
    star = star_case(ext.B0)
    dichotomy = None
    if star is not None:
        branch: Branch = "star-t-empty" if star.t.is_identity() else "star-t-nonempty"
    else:
        branch = "nonstar-induction"
        m = n if n % 2 else n - 1
        k = (m - 1) // 2
        if k >= 1:
            dichotomy = _induction_step(ext, k, cap)
    cache = cache or PowerCache(A, cap)
    size = len(cache.get(n))
    e = floor_exponent(n)
    c = derived_constant(n, A.rank)
    return TheoremReport(
        n=n,
        base_size=len(A),
        size=size,
        floor_exponent=e,
        ratio=Fraction(size, len(A) ** e),
        branch=branch,
        derived_constant=c,
        bound_ok=size >= c * len(A) ** e,
        extraction=ext,
        dichotomy=dichotomy,
    )


def _induction_step(ext: ExtractionResult, k: int, cap: int) -> Dichotomy:
    # B0 is not of star form, so its left periods or its right periods
    # differ; run the dichotomy on the side where they differ.
    A0, B0 = ext.A0, ext.B0
    if k == 1:
        rest = A0
    else:
        rest = product(power(product(A0, B0, cap), k - 1, cap), A0, cap)
    if common_left_period(B0.texts) is None:
        return lemma2_dichotomy(A0, B0, rest, "left")
    mirrored = A0 if k == 1 else product(A0, power(product(B0, A0, cap), k - 1, cap), cap)
    return lemma2_dichotomy(mirrored, B0, A0, "right")
