"""Extraction of a large "mutually reducing" pair of subsets from a
conjugate of a finite set.

Given ``A``, :func:`lemma1_extract` finds a conjugator ``u`` and subsets
``A0, B0`` of ``u A u^-1`` such that every product ``ab`` and ``ba``
(``a`` in ``A0``, ``b`` in ``B0``) is reduced, every ``b`` is at least as
long as every ``a``, and both subsets hold at least ``|A| / (2T)`` words
where ``T = 2 (2m)^2 - 1`` (``T = 31`` in rank 2).

Words are classified by (first letter, last letter).  If one class whose
key is not an inverse pair is large, it is split into its shortest and
longest halves.  If two inverse-pair classes ``(x, x^-1)``, ``(y, y^-1)``
are large, the shorter half of one and the longer half of the other are
taken, choosing the order by the length of each class's median word.
Otherwise a single class ``(x, x^-1)`` holds more than half of ``A``, and
``x^-1 A x`` has strictly smaller total length; recurse on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import PreconditionViolation
from .setops import WordSet, all_products_reduced, conjugate_set
from .words import Word, concat_text, letter_order_key

ClassKey = tuple[str, str]


def key_sort(key: ClassKey) -> tuple[int, int]:
    return letter_order_key(key[0]), letter_order_key(key[1])


def format_key(key: ClassKey) -> str:
    return f"{key[0]},{key[1]}"


def is_inverse_key(key: ClassKey) -> bool:
    return key[1] == key[0].swapcase()


def class_threshold(rank: int) -> int:
    """Denominator ``T``: a class is "large" when ``T * |class| >= |A|``.

    With ``(2m)^2`` classes, if no class qualifies for either split case
    the remaining classes hold less than ``((2m)^2 - 1) / T`` of the set,
    so the largest inverse-pair class holds more than half.
    """
    return 2 * (2 * rank) ** 2 - 1


def classify(A: WordSet) -> dict[ClassKey, WordSet]:
    """Partition by (first letter, last letter), keys in canonical order.

    The identity goes into the class of the first generator, ``(x, x)``.
    """
    if A.rank < 2:
        raise PreconditionViolation("classification needs rank >= 2")
    buckets: dict[ClassKey, set[str]] = {}
    for t in A.texts:
        key = (t[0], t[-1]) if t else ("x", "x")
        buckets.setdefault(key, set()).add(t)
    return {
        k: WordSet.from_texts(buckets[k], A.rank) for k in sorted(buckets, key=key_sort)
    }


def split_shortest_longest(S: WordSet) -> tuple[WordSet, WordSet]:
    """``ceil((m+1)/2)`` shortest and ``floor((m+1)/2)`` longest words.

    The counts sum to ``m + 1``, so the halves always share one word.
    """
    ordered = S.sorted_texts()
    m = len(ordered)
    if not m:
        raise ValueError("cannot split an empty set")
    n_short = (m + 2) // 2
    n_long = (m + 1) // 2
    return (
        WordSet.from_texts(ordered[:n_short], S.rank),
        WordSet.from_texts(ordered[m - n_long :], S.rank),
    )


def _median_length(S: WordSet) -> int:
    ordered = S.sorted_texts()
    return len(ordered[len(ordered) // 2])


@dataclass(frozen=True)
class Step:
    kind: Literal["conjugate", "case1", "case2"]
    letter: str | None = None
    classes: tuple[ClassKey, ...] = ()
    total_length: int = 0

    def to_json(self) -> dict:
        if self.kind == "conjugate":
            return {"kind": "conjugate", "letter": self.letter}
        if self.kind == "case1":
            return {"kind": "case1", "class": format_key(self.classes[0])}
        return {"kind": "case2", "classes": [format_key(k) for k in self.classes]}


@dataclass
class ExtractionResult:
    u: Word
    A0: WordSet
    B0: WordSet
    trace: list[Step] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "steps": [s.to_json() for s in self.trace],
            "u": str(self.u),
            "a0": [str(w) for w in self.A0],
            "b0": [str(w) for w in self.B0],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def lemma1_extract(A: WordSet) -> ExtractionResult:
    if not len(A):
        raise ValueError("extraction needs a nonempty set")
    if A.rank < 2:
        raise PreconditionViolation("extraction needs rank >= 2")
    T = class_threshold(A.rank)
    n = len(A)
    u = ""
    trace: list[Step] = []
    current = A
    while True:
        classes = classify(current)
        large = [k for k, S in classes.items() if T * len(S) >= n]

        for key in large:
            if not is_inverse_key(key):
                A0, B0 = split_shortest_longest(classes[key])
                trace.append(Step("case1", classes=(key,), total_length=current.total_length()))
                return ExtractionResult(Word._trusted(u, A.rank), A0, B0, trace)

        inverse_large = [k for k in large if is_inverse_key(k)]
        if len(inverse_large) >= 2:
            k1, k2 = inverse_large[:2]
            if _median_length(classes[k2]) < _median_length(classes[k1]):
                k1, k2 = k2, k1
            A0 = split_shortest_longest(classes[k1])[0]
            B0 = split_shortest_longest(classes[k2])[1]
            trace.append(Step("case2", classes=(k1, k2), total_length=current.total_length()))
            return ExtractionResult(Word._trusted(u, A.rank), A0, B0, trace)

        key = max(
            (k for k in classes if is_inverse_key(k)),
            key=lambda k: (len(classes[k]), [-v for v in key_sort(k)]),
        )
        assert 2 * len(classes[key]) > n, "no class holds more than half of the set"
        x = key[0]
        xi = x.swapcase()
        before = current.total_length()
        current = current.map(lambda t: concat_text(concat_text(xi, t), x))
        assert current.total_length() < before, "conjugation did not shorten the set"
        u = concat_text(xi, u)
        trace.append(Step("conjugate", letter=xi, classes=(key,), total_length=before))


def size_guarantee(rank: int) -> Fraction:
    """Guaranteed fraction ``|A0| / |A|`` (1/62 in rank 2)."""
    return Fraction(1, 2 * class_threshold(rank))


def verify_extraction(A: WordSet, r: ExtractionResult) -> bool:
    """Recheck every postcondition of :func:`lemma1_extract` from scratch."""
    if r.u.rank != A.rank or r.A0.rank != A.rank or r.B0.rank != A.rank:
        return False
    if not len(r.A0) or not len(r.B0):
        return False
    image = conjugate_set(r.u, A)
    if not (r.A0 <= image and r.B0 <= image):
        return False
    if not (all_products_reduced(r.A0, r.B0) and all_products_reduced(r.B0, r.A0)):
        return False
    if max(map(len, r.A0.texts)) > min(map(len, r.B0.texts)):
        return False
    denom = 2 * class_threshold(A.rank)
    return denom * len(r.A0) >= len(A) and denom * len(r.B0) >= len(A)

