"""Plain string periodicity helpers (no group structure involved)."""

from __future__ import annotations

from typing import Sequence


def border_array(s: Sequence) -> list[int]:
    """KMP failure function: ``b[i]`` is the length of the longest proper
    border of ``s[:i+1]``."""
    n = len(s)
    b = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = b[k - 1]
        if s[i] == s[k]:
            k += 1
        b[i] = k
    return b


def minimal_period(s: Sequence) -> int:
    """Smallest p > 0 with s[i] == s[i+p] for all valid i; 0 for empty s."""
    if not s:
        return 0
    return len(s) - border_array(s)[-1]


def string_root(s: str) -> tuple[str, int]:
    """Primitive root of a nonempty string: ``s == root * exponent`` with
    ``root`` not itself a power."""
    p = minimal_period(s)
    if len(s) % p == 0:
        return s[:p], len(s) // p
    return s, 1


def is_primitive(s: str) -> bool:
    return bool(s) and string_root(s)[1] == 1


def has_period(s: str, d: int) -> bool:
    """True iff shifting ``s`` by ``d`` letters matches it on the overlap."""
    return s[d:] == s[: len(s) - d]
