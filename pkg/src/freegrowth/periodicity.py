"""Left/right periods and tails of words, plus the overlap and
suffix-transfer facts built on them.

Periodicity here is plain string periodicity of the reduced letter
sequence.  A word ``w`` is periodic when its minimal period ``p`` satisfies
``2p <= |w|``; its left period is then ``w[:p]`` and ``w = period^s tail``
with ``s = |w| // p`` and the tail a proper prefix of the period.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .errors import PreconditionViolation, VerificationFailure
from .strings import is_primitive, minimal_period
from .words import Word, is_cyclically_reduced

Side = Literal["left", "right"]


@dataclass(frozen=True)
class PeriodDecomposition:
    side: Side
    period: Word
    exponent: int
    tail: Word

    def reconstruct(self) -> Word:
        body = self.period.text * self.exponent
        text = body + self.tail.text if self.side == "left" else self.tail.text + body
        return Word._trusted(text, self.period.rank)


def left_period_text(text: str) -> tuple[str, int, str] | None:
    """``(period, exponent, tail)`` for a periodic text, else ``None``."""
    n = len(text)
    p = minimal_period(text)
    if not n or 2 * p > n:
        return None
    s = n // p
    return text[:p], s, text[s * p :]


def left_period(w: Word) -> PeriodDecomposition | None:
    found = left_period_text(w.text)
    if found is None:
        return None
    period, s, tail = found
    assert is_primitive(period), f"minimal-period prefix {period!r} is a proper power"
    return PeriodDecomposition(
        "left", Word._trusted(period, w.rank), s, Word._trusted(tail, w.rank)
    )


def right_period(w: Word) -> PeriodDecomposition | None:
    found = left_period_text(w.text[::-1])
    if found is None:
        return None
    period, s, tail = found
    assert is_primitive(period)
    return PeriodDecomposition(
        "right", Word._trusted(period[::-1], w.rank), s, Word._trusted(tail[::-1], w.rank)
    )


def period(w: Word, side: Side = "left") -> PeriodDecomposition | None:
    if side == "left":
        return left_period(w)
    if side == "right":
        return right_period(w)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def is_periodic(w: Word) -> bool:
    n = len(w)
    return n > 0 and 2 * minimal_period(w.text) <= n


def overlap_lemma(u1: Word, u2: Word, v: Word) -> PeriodDecomposition:
    """Two occurrences of ``v`` starting after ``u1`` and after ``u2`` in one
    host word, overlapping in at least half of ``v``.

    Returns the left period of ``v`` and checks that ``u2`` ends with it.
    Raises :class:`PreconditionViolation` when the offsets are out of range
    or no host word ``u1 v w1 = u2 v w2`` exists.
    """
    d = len(u2) - len(u1)
    if d <= 0:
        raise PreconditionViolation(f"offset |u2|-|u1| = {d} must be positive")
    if 2 * d > len(v):
        raise PreconditionViolation(f"offset {d} exceeds |v|/2 = {len(v) / 2}")
    # u2 must read u1 followed by the first d letters of v, and v must
    # agree with itself shifted by d.
    if u2.text != u1.text + v.text[:d] or v.text[d:] != v.text[: len(v) - d]:
        raise PreconditionViolation("occurrences of v are inconsistent")
    dec = left_period(v)
    if dec is None or not u2.endswith(dec.period):
        raise VerificationFailure(
            "overlap did not force a period",
            {"u1": str(u1), "u2": str(u2), "v": str(v)},
        )
    return dec


def suffix_run(text: str, unit: str) -> int:
    """Largest ``s`` with ``text`` ending in ``unit * s``."""
    if not unit:
        raise ValueError("empty unit")
    s, end = 0, len(text)
    k = len(unit)
    while end >= k and text[end - k : end] == unit:
        s += 1
        end -= k
    return s


def lemma5_check(alpha: Word, beta: Word, a: Word, b: Word) -> bool:
    """Suffix transfer: if ``a`` and ``b`` both end with ``beta^2`` and ``a``
    ends with ``alpha^s`` (``s`` maximal), then ``b`` ends with ``alpha^s``.

    A ``False`` return means the statement failed on valid input.
    """
    for name, w in (("alpha", alpha), ("beta", beta)):
        if w.is_identity():
            raise PreconditionViolation(f"{name} is empty")
        if not is_cyclically_reduced(w.text):
            raise PreconditionViolation(f"{name}={w} is not cyclically reduced")
        if not is_primitive(w.text):
            raise PreconditionViolation(f"{name}={w} is a proper power")
    if len(beta) <= len(alpha):
        raise PreconditionViolation("need |beta| > |alpha|")
    square = beta.text * 2
    for name, w in (("a", a), ("b", b)):
        if not w.text.endswith(square):
            raise PreconditionViolation(f"{name}={w} does not end with beta^2")
    s = suffix_run(a.text, alpha.text)
    if s < 1:
        raise PreconditionViolation(f"a={a} does not end with alpha={alpha}")
    return b.text.endswith(alpha.text * s)
