import pytest
from hypothesis import given
from hypothesis import strategies as st

from framedlinks.braids import (
    Frame,
    FramedBraidWord,
    Sigma,
    SplitFramedBraid,
    braid_mul,
    crossing_permutation,
    exponent,
    mod_reduce,
    parse_braid,
    split_form,
)
from framedlinks.errors import MismatchedStrands, ParseError

from strategies import framed_words


def letterwise_split(w: FramedBraidWord) -> SplitFramedBraid:
    """Oracle: pull each framing letter up by inverting the permutation of the crossings above it."""
    framings = [0] * w.n
    crossings = []
    for letter in w.letters:
        if isinstance(letter, Sigma):
            crossings.append((letter.i, letter.sign))
        else:
            perm = crossing_permutation(crossings, w.n)
            top = perm.index(letter.j) + 1
            framings[top - 1] += letter.exp
    return SplitFramedBraid(w.n, tuple(framings), tuple(crossings))


def test_parse_examples():
    w = parse_braid("s1 s2^-1  t3^-2 t1", 3)
    assert w.letters == (Sigma(1), Sigma(2, -1), Frame(3, -2), Frame(1, 1))
    assert str(w) == "s1 s2^-1 t3^-2 t1"
    assert parse_braid("", 2).letters == ()
    assert parse_braid("s1^+1 t2^+4", 2).letters == (Sigma(1), Frame(2, 4))


@pytest.mark.parametrize("text,offset", [("s1 x2", 3), ("s1 s1^2", 6), ("t", 0), ("s1 t2^", 3)])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_braid(text, 3)
    assert info.value.offset == offset


def test_parse_index_out_of_range():
    with pytest.raises(IndexError):
        parse_braid("s3", 3)
    with pytest.raises(IndexError):
        parse_braid("t4", 3)


def test_split_examples():
    # framing below a crossing moves to the other strand
    assert split_form(parse_braid("s1 t1^2", 2)) == SplitFramedBraid(2, (0, 2), ((1, 1),))
    assert split_form(parse_braid("t1 s1 s2 t3", 3)).framings == (2, 0, 0)
    assert SplitFramedBraid(3, (0, 0, 0), ((1, 1), (2, 1))).permutation() == (3, 1, 2)


@given(framed_words())
def test_split_form_matches_letterwise_oracle(w):
    assert split_form(w) == letterwise_split(w)


@given(st.data())
def test_split_form_is_a_homomorphism(data):
    n = data.draw(st.integers(1, 4))
    a, b = data.draw(framed_words(n)), data.draw(framed_words(n))
    assert split_form(a * b) == braid_mul(split_form(a), split_form(b))
    assert exponent(a * b) == exponent(a) + exponent(b)


@given(st.data())
def test_permutation_composes(data):
    n = data.draw(st.integers(1, 4))
    a, b = split_form(data.draw(framed_words(n))), split_form(data.draw(framed_words(n)))
    pa, pb, pab = a.permutation(), b.permutation(), (a * b).permutation()
    assert pab == tuple(pb[pa[i] - 1] for i in range(n))


@given(st.data(), st.integers(1, 6))
def test_mod_reduce_commutes_with_product(data, d):
    n = data.draw(st.integers(1, 4))
    a, b = split_form(data.draw(framed_words(n))), split_form(data.draw(framed_words(n)))
    assert mod_reduce(a * b, d) == mod_reduce(mod_reduce(a, d) * mod_reduce(b, d), d)


@given(framed_words())
def test_to_word_round_trip(w):
    s = split_form(w)
    assert split_form(s.to_word()) == s


def test_components():
    assert split_form(parse_braid("s1 s1", 2)).components() == 2
    assert split_form(parse_braid("s1 s2", 3)).components() == 1
    assert SplitFramedBraid.identity(3).components() == 3


def test_mismatched_strands():
    with pytest.raises(MismatchedStrands):
        FramedBraidWord(2) * FramedBraidWord(3)
    with pytest.raises(MismatchedStrands):
        braid_mul(SplitFramedBraid.identity(2), SplitFramedBraid.identity(3))
    with pytest.raises(ValueError):
        mod_reduce(SplitFramedBraid.identity(2), 0)
