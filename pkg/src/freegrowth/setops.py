"""Finite word sets, product sets ``AB`` and powers ``A^n``."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import AlphabetError, SizeCapExceeded
from .words import Word, concat_text, invert_text, parse_word, text_sort_key

DEFAULT_CAP = 10**8


class WordSet:
    """A finite set of reduced words over one alphabet.

    Elements are stored by their text; iteration is in canonical order
    (length, then letterwise).
    """

    __slots__ = ("rank", "_texts", "_sorted")

    def __init__(self, words: Iterable[Word] = (), rank: int | None = None):
        texts = set()
        for w in words:
            if rank is None:
                rank = w.rank
            elif w.rank != rank:
                raise AlphabetError(f"word {w} has rank {w.rank}, set has rank {rank}")
            texts.add(w.text)
        self.rank = 2 if rank is None else rank
        self._texts = frozenset(texts)
        self._sorted: tuple[str, ...] | None = None

    @classmethod
    def from_texts(cls, texts: Iterable[str], rank: int = 2) -> "WordSet":
        """Build from already-reduced texts without re-validating them."""
        ws = cls.__new__(cls)
        ws.rank = rank
        ws._texts = frozenset(texts)
        ws._sorted = None
        return ws

    @property
    def texts(self) -> frozenset[str]:
        return self._texts

    def sorted_texts(self) -> tuple[str, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._texts, key=text_sort_key))
        return self._sorted

    def words(self) -> list[Word]:
        return [Word._trusted(t, self.rank) for t in self.sorted_texts()]

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words())

    def __len__(self) -> int:
        return len(self._texts)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, Word) and w.rank == self.rank and w.text in self._texts

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return self.rank == other.rank and self._texts == other._texts

    def __hash__(self) -> int:
        return hash((self.rank, self._texts))

    def __le__(self, other: "WordSet") -> bool:
        return self.rank == other.rank and self._texts <= other._texts

    def __or__(self, other: "WordSet") -> "WordSet":
        _same_rank(self, other)
        return WordSet.from_texts(self._texts | other._texts, self.rank)

    def __and__(self, other: "WordSet") -> "WordSet":
        _same_rank(self, other)
        return WordSet.from_texts(self._texts & other._texts, self.rank)

    def __sub__(self, other: "WordSet") -> "WordSet":
        _same_rank(self, other)
        return WordSet.from_texts(self._texts - other._texts, self.rank)

    def total_length(self) -> int:
        return sum(map(len, self._texts))

    def map(self, fn) -> "WordSet":
        """Apply a text -> text function elementwise."""
        return WordSet.from_texts({fn(t) for t in self._texts}, self.rank)

    def __repr__(self) -> str:
        shown = ", ".join(t or "1" for t in self.sorted_texts()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"WordSet({{{shown}{more}}}, rank={self.rank})"


def _same_rank(a: WordSet, b: WordSet) -> int:
    if a.rank != b.rank:
        raise AlphabetError(f"alphabet mismatch: rank {a.rank} vs rank {b.rank}")
    return a.rank


def word_set(*texts: str, rank: int = 2) -> WordSet:
    """Convenience constructor from text encodings (``"1"`` is the identity)."""
    return WordSet((parse_word(t, rank) for t in texts), rank=rank)


def product_texts(A: Iterable[str], B: Iterable[str], cap: int = DEFAULT_CAP) -> set[str]:
    # Bucket B by first letter: only b starting with the inverse of a's last
    # letter can cancel, everything else is plain concatenation.
    by_first: dict[str, list[str]] = defaultdict(list)
    for b in B:
        by_first[b[:1]].append(b)
    firsts = list(by_first)
    out: set[str] = set()
    add = out.add
    for a in A:
        inv = a[-1:].swapcase() if a else None
        for f in firsts:
            bucket = by_first[f]
            if f and f == inv:
                for b in bucket:
                    add(concat_text(a, b))
            else:
                for b in bucket:
                    add(a + b)
        if len(out) > cap:
            raise SizeCapExceeded(f"product exceeded {cap} elements", cap)
    return out


def product(A: WordSet, B: WordSet, cap: int = DEFAULT_CAP) -> WordSet:
    """``AB = {ab : a in A, b in B}``, deduplicated."""
    rank = _same_rank(A, B)
    return WordSet.from_texts(product_texts(A.texts, B.texts, cap), rank)


def power(A: WordSet, n: int, cap: int = DEFAULT_CAP) -> WordSet:
    """``A^n`` via balanced splitting ``A^(n//2) A^(n - n//2)`` with
    memoized intermediate powers."""
    return PowerCache(A, cap).get(n)


class PowerCache:
    """Memoized powers of one set; shares intermediates across exponents."""

    def __init__(self, A: WordSet, cap: int = DEFAULT_CAP):
        self.base = A
        self.cap = cap
        self._memo: dict[int, WordSet] = {1: A}

    def get(self, n: int) -> WordSet:
        if n < 1:
            raise ValueError(f"exponent must be >= 1, got {n}")
        if n not in self._memo:
            lo = n // 2
            left, right = self.get(lo), self.get(n - lo)
            try:
                self._memo[n] = product(left, right, self.cap)
            except SizeCapExceeded as exc:
                raise SizeCapExceeded(
                    f"A^{n} exceeded {self.cap} elements", self.cap, self.reached()
                ) from exc
        return self._memo[n]

    def reached(self) -> int:
        """Largest exponent computed so far."""
        return max(self._memo)


def naive_power(A: WordSet, n: int, cap: int = DEFAULT_CAP) -> WordSet:
    """Left fold ``((A A) A) ...``; the reference for :func:`power`."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    acc = A
    for _ in range(n - 1):
        acc = product(acc, A, cap)
    return acc


def conjugate_set(u: Word, A: WordSet) -> WordSet:
    """``{u a u^-1 : a in A}``."""
    if u.rank != A.rank:
        raise AlphabetError("alphabet mismatch")
    ui = invert_text(u.text)
    return A.map(lambda t: concat_text(concat_text(u.text, t), ui))


def all_products_reduced(A: WordSet, B: WordSet) -> bool:
    """True iff no product ``ab`` (in this order) cancels."""
    _same_rank(A, B)
    lasts = {a[-1] for a in A.texts if a}
    firsts = {b[0].swapcase() for b in B.texts if b}
    return not (lasts & firsts)


def floor_exponent(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class GrowthRow:
    n: int
    size: int
    ratio: Fraction

    @property
    def ratio_decimal(self) -> float:
        return float(self.ratio)


@dataclass
class GrowthReport:
    base_size: int
    rows: list[GrowthRow] = field(default_factory=list)
    truncated: bool = False

    def to_csv(self) -> str:
        lines = ["n,size,ratio_num,ratio_den,ratio"]
        for r in self.rows:
            lines.append(
                f"{r.n},{r.size},{r.ratio.numerator},{r.ratio.denominator},{r.ratio_decimal:.12g}"
            )
        return "\n".join(lines) + "\n"


def growth_table(A: WordSet, nmax: int, cap: int = DEFAULT_CAP) -> GrowthReport:
    """Rows ``(n, |A^n|, |A^n| / |A|^floor((n+1)/2))`` for ``n = 1..nmax``.

    Stops early (``truncated=True``) if a power exceeds ``cap``.
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    if not len(A):
        raise ValueError("growth of the empty set is undefined")
    cache = PowerCache(A, cap)
    report = GrowthReport(len(A))
    for n in range(1, nmax + 1):
        try:
            size = len(cache.get(n))
        except SizeCapExceeded:
            report.truncated = True
            break
        report.rows.append(GrowthRow(n, size, Fraction(size, len(A) ** floor_exponent(n))))
    return report
