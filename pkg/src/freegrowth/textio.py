"""Word-set files: one word per line, ``#`` comments, blank lines ignored."""

from __future__ import annotations

from pathlib import Path

from .setops import WordSet
from .words import Alphabet, parse_word


def parse_word_set(text: str, rank: int = 2) -> WordSet:
    alphabet = Alphabet(rank)
    words = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            words.append(parse_word(line, alphabet))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return WordSet(words, rank=rank)


def read_word_set(path: str | Path, rank: int = 2) -> WordSet:
    return parse_word_set(Path(path).read_text(encoding="utf-8"), rank)


def format_word_set(S: WordSet) -> str:
    return "".join(f"{t or '1'}\n" for t in S.sorted_texts())


def write_word_set(path: str | Path, S: WordSet) -> None:
    Path(path).write_text(format_word_set(S), encoding="utf-8")
