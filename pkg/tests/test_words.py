import itertools

import pytest
from hypothesis import given, strategies as st

from freegrowth.errors import AlphabetError
from freegrowth.setops import WordSet, conjugate_set, power
from freegrowth.words import (
    Alphabet,
    Letter,
    Word,
    commutes,
    concat,
    conjugate,
    find_noncommuting_pair,
    invert,
    primitive_root,
    reduce,
)

from conftest import S, W, naive_reduce, raw_texts, reduced, reduced_texts


@pytest.mark.parametrize(
    "raw, expected",
    [("xX", "1"), ("xyYx", "xx"), ("xYyyXx", "xy")],
)
def test_reduce_examples(raw, expected):
    assert str(reduce(raw)) == expected


def test_reduce_accepts_letters():
    x, y = Letter(1, 1), Letter(2, 1)
    assert str(reduce([x, y, y.inverse(), x])) == "xx"


def test_reduce_rejects_out_of_rank():
    with pytest.raises(AlphabetError):
        reduce([Letter(3, 1)], rank=2)
    with pytest.raises(AlphabetError):
        reduce("xz", rank=2)


def test_reduce_idempotent_exhaustive():
    # every letter sequence up to length 9; longer inputs go through the
    # hypothesis test below
    for n in range(10):
        for tup in itertools.product("xXyY", repeat=n):
            once = reduce(tup)
            assert reduce(once.text) == once
            assert once.text == naive_reduce("".join(tup))


@given(raw_texts)
def test_reduce_matches_naive(raw):
    w = reduce(raw)
    assert w.text == naive_reduce(raw)
    assert reduce(w.text) == w


def test_word_rejects_unreduced():
    with pytest.raises(ValueError):
        Word("xX")
    with pytest.raises(AlphabetError):
        Word("z", rank=2)


@pytest.mark.parametrize(
    "a, b, expected",
    [("xy", "yx", "xyyx"), ("xy", "Yx", "xx"), ("xyX", "xYX", "1")],
)
def test_concat_examples(a, b, expected):
    assert str(concat(W(a), W(b))) == expected


@given(reduced)
def test_concat_inverse_law(t):
    w = Word(t)
    assert concat(w, invert(w)).is_identity()
    assert concat(invert(w), w).is_identity()


@given(reduced, reduced, reduced)
def test_concat_associative(a, b, c):
    a, b, c = Word(a), Word(b), Word(c)
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(reduced, reduced)
def test_concat_length_parity(a, b):
    ab = concat(Word(a), Word(b))
    assert len(ab) <= len(a) + len(b)
    assert (len(ab) - len(a) - len(b)) % 2 == 0
    assert ab.text == naive_reduce(a + b)


def test_concat_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        concat(Word("x", 2), Word("x", 3))


@pytest.mark.parametrize("w, expected", [("xy", "YX"), ("1", "1"), ("xx", "XX")])
def test_invert_examples(w, expected):
    assert str(invert(W(w))) == expected


@given(reduced)
def test_invert_involution(t):
    assert invert(invert(Word(t))) == Word(t)


@pytest.mark.parametrize(
    "u, w, expected",
    [("X", "xyX", "y"), ("1", "xyY", "x"), ("y", "x", "yxY")],
)
def test_conjugate_examples(u, w, expected):
    assert str(conjugate(W(u), W(w))) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [("x", "xxx", True), ("x", "y", False), ("xy", "yx", False), ("x", "X", True), ("1", "xy", True)],
)
def test_commutes_examples(a, b, expected):
    assert commutes(W(a), W(b)) is expected


@pytest.mark.parametrize(
    "w, root, t",
    [("xyxyxy", "xy", 3), ("xyX", "xyX", 1), ("xyyX", "xyX", 2), ("XXX", "X", 3), ("yxyxYXYXY", "yxyxYXYXY", 1)],
)
def test_primitive_root_examples(w, root, t):
    r, e = primitive_root(W(w))
    assert (str(r), e) == (root, t)


def test_primitive_root_identity_rejected():
    with pytest.raises(ValueError):
        primitive_root(Word())


@given(reduced.filter(bool))
def test_primitive_root_power_back(t):
    w = Word(t)
    r, e = primitive_root(w)
    assert r ** e == w
    assert primitive_root(r)[1] == 1


def _same_cyclic_subgroup(a: Word, b: Word) -> bool:
    if a.is_identity() or b.is_identity():
        return True
    ra, rb = primitive_root(a)[0], primitive_root(b)[0]
    return ra == rb or ra == invert(rb)


def test_commutes_iff_common_root_exhaustive():
    # all pairs of reduced words of length <= 6; roots compared up to
    # inversion (x and x^-1 commute but have roots x and X)
    words = [Word(t) for t in reduced_texts(6)]
    keys = {}
    for w in words:
        if not w.is_identity():
            r = primitive_root(w)[0]
            keys[w] = min(r.text, invert(r).text)
    for a in words:
        ka = keys.get(a)
        for b in words:
            kb = keys.get(b)
            expected = ka is None or kb is None or ka == kb
            assert commutes(a, b) == expected, (a, b)


@given(reduced, reduced)
def test_commutes_iff_common_root_random(a, b):
    a, b = Word(a), Word(b)
    assert commutes(a, b) == _same_cyclic_subgroup(a, b)


@pytest.mark.parametrize(
    "texts, expected",
    [(("x", "xx", "xxx"), None), (("xx", "yyy"), ("xx", "yyy")), (("1", "x"), None), (("xyX", "xyyX", "XX"), ("XX", "xyX"))],
)
def test_find_noncommuting_pair(texts, expected):
    pair = find_noncommuting_pair(S(*texts))
    if expected is None:
        assert pair is None
    else:
        assert pair is not None and not commutes(*pair)
        assert {str(w) for w in pair} == set(expected)


@given(st.lists(reduced, min_size=1, max_size=6))
def test_find_noncommuting_pair_agrees_with_pairwise(texts):
    words = [Word(t) for t in texts]
    any_pair = any(not commutes(a, b) for a in words for b in words)
    assert (find_noncommuting_pair(words) is not None) == any_pair


def test_canonical_order():
    words = sorted(W(t) for t in ["yx", "X", "y", "1", "Y", "x", "xY", "xy"])
    assert [str(w) for w in words] == ["1", "x", "X", "y", "Y", "xy", "xY", "yx"]


def test_alphabet_bounds_and_letters():
    assert Alphabet(2).chars == "xXyY"
    assert Alphabet(4).chars == "xXyYzZaA"
    with pytest.raises(AlphabetError):
        Alphabet(0)
    with pytest.raises(AlphabetError):
        Alphabet(27)
    assert W("xY").letters == (Letter(1, 1), Letter(2, -1))


@given(st.lists(reduced, min_size=1, max_size=4), reduced, st.integers(1, 3))
def test_conjugation_preserves_power_size(texts, u, n):
    A = WordSet.from_texts(texts)
    assert len(power(conjugate_set(Word(u), A), n)) == len(power(A, n))
