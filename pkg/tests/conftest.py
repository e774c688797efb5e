import itertools
import re

import pytest
from hypothesis import strategies as st

from freegrowth.setops import word_set
from freegrowth.words import parse_word

W = parse_word
S = word_set

_CANCEL = re.compile(r"xX|Xx|yY|Yy|zZ|Zz")


def naive_reduce(text: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    prev = None
    while prev != text:
        prev, text = text, _CANCEL.sub("", text)
    return text


def naive_periodic_decomposition(text: str):
    """Search every (period, exponent, tail) matching the definition."""
    found = []
    for p in range(1, len(text) // 2 + 1):
        per = text[:p]
        if any(per == per[:d] * (p // d) for d in range(1, p) if p % d == 0):
            continue
        s = 0
        while text.startswith(per * (s + 1)):
            s += 1
        tail = text[s * p:]
        if s >= 2 and len(tail) < p and per.startswith(tail):
            found.append((per, s, tail))
    return found


def naive_product(A, B):
    return {naive_reduce(a + b) for a, b in itertools.product(A, B)}


def reduced_texts(max_len: int, letters: str = "xXyY"):
    out = []
    for n in range(max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            t = "".join(tup)
            if naive_reduce(t) == t:
                out.append(t)
    return out


raw_texts = st.text(alphabet="xXyY", max_size=14)
reduced = raw_texts.map(naive_reduce)
positive = st.text(alphabet="xy", max_size=8)


@pytest.fixture
def extremal3():
    return S("x", "y", "yy", "yyy")
