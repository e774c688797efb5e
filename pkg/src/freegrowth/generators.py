"""Deterministic word and word-set generators.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the integer seed, so a seed replays the same sets on every
platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .setops import WordSet
from .words import GENERATOR_CHARS, Alphabet, Word


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    rank: int = 2
    max_length: int = 8
    set_size: int = 10
    positive_only: bool = False


def extremal_family(k: int, rank: int = 2) -> WordSet:
    """``{x, y, y^2, ..., y^k}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return WordSet.from_texts(["x"] + ["y" * i for i in range(1, k + 1)], rank)


def _letters(rank: int, positive_only: bool) -> str:
    return GENERATOR_CHARS[:rank] if positive_only else Alphabet(rank).chars


def enumerate_texts(rank: int, max_length: int, positive_only: bool = False) -> Iterator[str]:
    """Reduced texts of length <= max_length in canonical order."""
    letters = _letters(rank, positive_only)
    layer = [""]
    yield ""
    for _ in range(max_length):
        nxt = []
        for t in layer:
            bad = t[-1].swapcase() if t else None
            for c in letters:
                if c != bad:
                    nxt.append(t + c)
        yield from nxt
        layer = nxt


def enumerate_words(alphabet: Alphabet | int, max_length: int) -> Iterator[Word]:
    rank = alphabet if isinstance(alphabet, int) else alphabet.rank
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    for t in enumerate_texts(rank, max_length):
        yield Word._trusted(t, rank)


def count_words(rank: int, max_length: int, min_length: int = 0, positive_only: bool = False) -> int:
    """Number of reduced words with length in ``min_length..max_length``."""
    if positive_only:
        per = lambda l: rank**l  # noqa: E731
    else:
        per = lambda l: 1 if l == 0 else 2 * rank * (2 * rank - 1) ** (l - 1)  # noqa: E731
    return sum(per(l) for l in range(min_length, max_length + 1))


def random_text(rng: random.Random, rank: int, length: int, positive_only: bool = False) -> str:
    letters = _letters(rank, positive_only)
    out: list[str] = []
    for _ in range(length):
        if out and not positive_only:
            bad = out[-1].swapcase()
            c = rng.choice([c for c in letters if c != bad])
        else:
            c = rng.choice(letters)
        out.append(c)
    return "".join(out)


def random_set(cfg: GeneratorConfig) -> WordSet:
    """``cfg.set_size`` distinct reduced words, lengths uniform in
    ``1..cfg.max_length``."""
    available = count_words(cfg.rank, cfg.max_length, 1, cfg.positive_only)
    if cfg.set_size > available:
        raise ValueError(
            f"only {available} words of length 1..{cfg.max_length} exist, "
            f"asked for {cfg.set_size}"
        )
    rng = random.Random(cfg.seed)
    seen: set[str] = set()
    while len(seen) < cfg.set_size:
        length = rng.randint(1, cfg.max_length)
        seen.add(random_text(rng, cfg.rank, length, cfg.positive_only))
    return WordSet.from_texts(seen, cfg.rank)
