"""Freely reduced words over a finite-rank free group.

A word is stored as its text encoding: generator ``i`` is the ``i``-th
character of ``GENERATOR_CHARS`` and its inverse is the same character in
upper case.  The identity is the empty string internally and ``"1"`` in
text.  Every :class:`Word` is freely reduced; the invariant is checked once,
at construction.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import AlphabetError
from .strings import string_root

GENERATOR_CHARS = "xyz" + "abcdefghijklmnopqrstuvw"
MAX_RANK = len(GENERATOR_CHARS)
IDENTITY_TEXT = "1"

# Canonical letter order: generator index ascending, positive before inverse.
_LETTER_RANK = {}
for _i, _c in enumerate(GENERATOR_CHARS):
    _LETTER_RANK[_c] = 2 * _i
    _LETTER_RANK[_c.upper()] = 2 * _i + 1
_ORDER_TABLE = str.maketrans({c: chr(0x100 + r) for c, r in _LETTER_RANK.items()})


def letter_order_key(ch: str) -> int:
    return _LETTER_RANK[ch]


def text_sort_key(text: str) -> tuple[int, str]:
    """Canonical order on reduced texts: length, then letterwise."""
    return len(text), text.translate(_ORDER_TABLE)


@dataclass(frozen=True)
class Alphabet:
    rank: int = 2

    def __post_init__(self):
        if not 1 <= self.rank <= MAX_RANK:
            raise AlphabetError(f"rank must be in 1..{MAX_RANK}, got {self.rank}")

    @functools.cached_property
    def chars(self) -> str:
        """All 2m letters in canonical order."""
        return "".join(c + c.upper() for c in GENERATOR_CHARS[: self.rank])

    def __contains__(self, ch: str) -> bool:
        return len(ch) == 1 and ch in self.chars

    def letter(self, ch: str) -> "Letter":
        if ch not in self:
            raise AlphabetError(f"letter {ch!r} outside rank-{self.rank} alphabet")
        return Letter(GENERATOR_CHARS.index(ch.lower()) + 1, -1 if ch.isupper() else 1)


class Letter(NamedTuple):
    generator: int
    sign: int

    @property
    def char(self) -> str:
        c = GENERATOR_CHARS[self.generator - 1]
        return c if self.sign > 0 else c.upper()

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


def _check_text(text: str, rank: int) -> None:
    allowed = Alphabet(rank).chars
    prev = ""
    for ch in text:
        if ch not in allowed:
            raise AlphabetError(f"letter {ch!r} outside rank-{rank} alphabet")
        if prev and prev == ch.swapcase():
            raise ValueError(f"{text!r} is not freely reduced")
        prev = ch


@functools.total_ordering
@dataclass(frozen=True)
class Word:
    """An element of the free group of the given rank, as a reduced word."""

    text: str = ""
    rank: int = 2

    def __post_init__(self):
        _check_text(self.text, self.rank)

    @classmethod
    def _trusted(cls, text: str, rank: int) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "text", text)
        object.__setattr__(w, "rank", rank)
        return w

    @classmethod
    def identity(cls, rank: int = 2) -> "Word":
        return cls._trusted("", rank)

    @classmethod
    def generator(cls, index: int, rank: int = 2) -> "Word":
        return cls._trusted(Letter(index, 1).char, rank)

    @property
    def letters(self) -> tuple[Letter, ...]:
        a = Alphabet(self.rank)
        return tuple(a.letter(c) for c in self.text)

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.rank)

    def is_identity(self) -> bool:
        return not self.text

    def sort_key(self) -> tuple[int, str]:
        return text_sort_key(self.text)

    def __len__(self) -> int:
        return len(self.text)

    def __lt__(self, other: "Word") -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else invert(self)
        n = abs(n)
        core, conj = cyclic_core(base.text)
        # powers of a reduced word only cancel across the conjugating shell
        body = conj + core * n + conj.swapcase()[::-1] if n else ""
        return Word._trusted(body, self.rank)

    def endswith(self, other: "Word") -> bool:
        return self.text.endswith(other.text)

    def startswith(self, other: "Word") -> bool:
        return self.text.startswith(other.text)

    def __str__(self) -> str:
        return self.text or IDENTITY_TEXT

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


# -- text-level primitives -------------------------------------------------
# These operate on reduced texts and are what the set machinery uses in
# inner loops.

def reduce_text(text: Iterable[str]) -> str:
    out: list[str] = []
    for ch in text:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def concat_text(a: str, b: str) -> str:
    k = 0
    n = min(len(a), len(b))
    la = len(a)
    while k < n and a[la - 1 - k] == b[k].swapcase():
        k += 1
    if k:
        return a[: la - k] + b[k:]
    return a + b


def invert_text(a: str) -> str:
    return a[::-1].swapcase()


def cyclic_core(text: str) -> tuple[str, str]:
    """Split a reduced text as ``c + r + c^-1`` with ``r`` cyclically
    reduced; returns ``(r, c)``."""
    i, j = 0, len(text) - 1
    while i < j and text[i] == text[j].swapcase():
        i += 1
        j -= 1
    return text[i : j + 1], text[:i]


def is_cyclically_reduced(text: str) -> bool:
    return len(text) < 2 or text[0] != text[-1].swapcase()


# -- public operations -----------------------------------------------------

def _same_rank(a: Word, b: Word) -> int:
    if a.rank != b.rank:
        raise AlphabetError(f"alphabet mismatch: rank {a.rank} vs rank {b.rank}")
    return a.rank


def reduce(raw: Iterable[Letter | str], rank: int = 2) -> Word:
    """Freely reduce a sequence of letters (``Letter`` tuples or letter
    characters) in a single stack pass."""
    alphabet = Alphabet(rank)
    chars = []
    for item in raw:
        if isinstance(item, Letter):
            if not 1 <= item.generator <= rank or item.sign not in (1, -1):
                raise AlphabetError(f"{item} outside rank-{rank} alphabet")
            chars.append(item.char)
        elif item in alphabet:
            chars.append(item)
        else:
            raise AlphabetError(f"letter {item!r} outside rank-{rank} alphabet")
    return Word._trusted(reduce_text(chars), rank)


def concat(a: Word, b: Word) -> Word:
    return Word._trusted(concat_text(a.text, b.text), _same_rank(a, b))


def invert(w: Word) -> Word:
    return Word._trusted(invert_text(w.text), w.rank)


def conjugate(u: Word, w: Word) -> Word:
    """``u w u^-1``."""
    rank = _same_rank(u, w)
    return Word._trusted(concat_text(concat_text(u.text, w.text), invert_text(u.text)), rank)


def commutes(a: Word, b: Word) -> bool:
    _same_rank(a, b)
    return concat_text(a.text, b.text) == concat_text(b.text, a.text)


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return ``(z, t)`` with ``w == z**t`` and ``z`` not a proper power.

    Works on the cyclic core: roots of ``c r c^-1`` are conjugates by ``c``
    of roots of the cyclically reduced ``r``, and for cyclically reduced
    words group roots and string roots agree.
    """
    if w.is_identity():
        raise ValueError("the identity has no primitive root")
    core, conj = cyclic_core(w.text)
    root, t = string_root(core)
    return Word._trusted(conj + root + invert_text(conj), w.rank), t


def root_class(w: Word) -> str:
    """Key identifying the maximal cyclic subgroup containing a nontrivial
    ``w``: its primitive root up to inversion."""
    z = primitive_root(w)[0].text
    zi = invert_text(z)
    return min(z, zi, key=text_sort_key)


def find_noncommuting_pair(words: Iterable[Word]) -> tuple[Word, Word] | None:
    """Some pair of non-commuting elements, or ``None`` when all of them lie
    in one cyclic subgroup."""
    nontrivial = sorted(w for w in words if not w.is_identity())
    if not nontrivial:
        return None
    first = nontrivial[0]
    key = root_class(first)
    for other in nontrivial[1:]:
        if root_class(other) != key:
            assert not commutes(first, other)
            return first, other
    return None


def parse_word(text: str, alphabet: Alphabet | int = 2) -> Word:
    """Parse the letter encoding; the result is reduced on the way in."""
    if isinstance(alphabet, int):
        alphabet = Alphabet(alphabet)
    if not text:
        raise ValueError("empty word text; use '1' for the identity")
    if text == IDENTITY_TEXT:
        return Word.identity(alphabet.rank)
    for ch in text:
        if ch not in alphabet:
            if ch.lower() in GENERATOR_CHARS:
                raise AlphabetError(f"letter {ch!r} outside rank-{alphabet.rank} alphabet")
            raise AlphabetError(f"unknown character {ch!r} in {text!r}")
    return Word._trusted(reduce_text(text), alphabet.rank)


def format_word(w: Word) -> str:
    return str(w)
