import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from framedlinks.braids import parse_braid, split_form
from framedlinks.errors import BoundExceeded, MismatchedAlgebra
from framedlinks.poly import Poly
from framedlinks.yokonuma import (
    AlgebraElement,
    BasisWord,
    FrameLevel,
    TailLevel,
    basis_size,
    e_idempotent,
    e_pair,
    e_shift,
    embed_braid,
    enumerate_basis,
    g_power,
    random_element,
    relation_suite,
)

from strategies import framed_words

small = st.tuples(st.integers(1, 3), st.integers(1, 3))


def inversions(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def character(x: AlgebraElement, c: int, lam: complex, uv: complex) -> complex:
    """One-dimensional representation t_j -> zeta^c, g_i -> lam (lam in {1, -u}), e_i -> 1."""
    zeta = cmath.exp(2j * cmath.pi * c / x.d)
    total = 0j
    for (a, w), coeff in x._data.items():
        total += coeff.eval(uv) * zeta ** sum(a) * lam ** inversions(w)
    return total


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_basis_count_and_distinct_keys(d, n):
    words = list(enumerate_basis(d, n))
    assert len(words) == basis_size(d, n) == d ** n * [1, 1, 2, 6, 24][n]
    assert len({b.key for b in words}) == len(words)
    for b in words[:: max(1, len(words) // 20)]:
        assert BasisWord.from_key(d, b.key) == b


def test_basis_word_validation_and_str():
    b = BasisWord(3, 3, (FrameLevel(1), TailLevel(1, 2), TailLevel(2, 0)))
    assert str(b) == "t1^1g1t1^2g2"
    assert str(BasisWord(2, 2, (FrameLevel(0), FrameLevel(0)))) == "1"
    with pytest.raises(ValueError):
        BasisWord(2, 2, (TailLevel(1, 0), FrameLevel(0)))
    with pytest.raises(ValueError):
        BasisWord(2, 2, (FrameLevel(2), FrameLevel(0)))


@pytest.mark.parametrize("d,n", [(1, 3), (2, 3), (3, 3), (2, 4)])
def test_relation_suite(d, n):
    rep = relation_suite(d, n)
    assert rep.ok, rep.table()


@given(small, st.integers(0, 10_000))
def test_multiplication_respects_characters(dn, seed):
    d, n = dn
    rng = random.Random(seed)
    a, b = random_element(d, n, rng), random_element(d, n, rng)
    uv = complex(1.3, 0.4)
    for c in range(d):
        for lam in (1, -uv):
            lhs = character(a * b, c, lam, uv)
            rhs = character(a, c, lam, uv) * character(b, c, lam, uv)
            assert abs(lhs - rhs) <= 1e-9 * (1 + abs(rhs))


@given(small, st.integers(0, 10_000))
def test_associative_and_distributive(dn, seed):
    d, n = dn
    rng = random.Random(seed)
    a, b, c = (random_element(d, n, rng, terms=2) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.integers(1, 3), st.data())
def test_embedding_is_a_homomorphism(d, data):
    n = data.draw(st.integers(1, 3))
    v, w = data.draw(framed_words(n, max_len=5)), data.draw(framed_words(n, max_len=5))
    assert embed_braid(v * w, d) == embed_braid(v, d) * embed_braid(w, d)
    assert embed_braid(split_form(v), d) == embed_braid(v, d)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_powers_closed_form(d):
    g, gi = AlgebraElement.g(d, 2, 1), AlgebraElement.g_inv(d, 2, 1)
    pos = neg = AlgebraElement.unit(d, 2)
    for m in range(7):
        assert g_power(d, 2, 1, m) == pos
        assert g_power(d, 2, 1, -m) == neg
        pos, neg = pos * g, neg * gi


@pytest.mark.parametrize("d,n", [(2, 3), (3, 3), (2, 4)])
def test_generators_permute_pair_idempotents(d, n):
    for i in range(1, n):
        g, gi = AlgebraElement.g(d, n, i), AlgebraElement.g_inv(d, n, i)
        swap = {i: i + 1, i + 1: i}
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if j == k:
                    continue
                moved = e_pair(d, n, swap.get(j, j), swap.get(k, k))
                assert g * e_pair(d, n, j, k) == moved * g
                assert gi * e_pair(d, n, j, k) == moved * gi


def test_named_elements():
    d = 3
    e = e_idempotent(d, 2, 1)
    expected = AlgebraElement.zero(d, 2)
    for s in range(d):
        expected = expected + (AlgebraElement.t(d, 2, 1, s) * AlgebraElement.t(d, 2, 2, -s)).scale(Fraction(1, d))
    assert e == expected
    assert e_pair(d, 2, 1, 2) == e == e_pair(d, 2, 2, 1)
    assert e_shift(d, 2, 1, 0) == e
    assert e_shift(d, 2, 1, 1) == AlgebraElement.t(d, 2, 1) * e
    assert e * e == e


def test_mul_e_with_shift_matches_explicit_sum():
    d, n = 3, 3
    x = random_element(d, n, random.Random(1))
    explicit = AlgebraElement.zero(d, n)
    for s in range(d):
        explicit = explicit + x.mul_t(1, 2 + s).mul_t(3, -s)
    assert x.mul_e(1, 3, shift=2) == explicit.scale(Fraction(1, d))


@given(small, st.integers(0, 10_000))
def test_json_round_trip(dn, seed):
    d, n = dn
    x = random_element(d, n, random.Random(seed))
    assert AlgebraElement.from_json_obj(x.to_json_obj()) == x


def test_with_strands_is_an_embedding():
    d = 2
    a = embed_braid(parse_braid("s1 t2 s1^-1", 2), d)
    b = embed_braid(parse_braid("t1 s1", 2), d)
    assert (a * b).with_strands(3) == a.with_strands(3) * b.with_strands(3)
    with pytest.raises(MismatchedAlgebra):
        a.with_strands(1)


def test_errors():
    with pytest.raises(IndexError):
        AlgebraElement.g(2, 2, 2)
    with pytest.raises(IndexError):
        e_shift(2, 2, 1, 2)
    with pytest.raises(IndexError):
        e_pair(2, 3, 1, 1)
    with pytest.raises(MismatchedAlgebra):
        AlgebraElement.unit(2, 2) * AlgebraElement.unit(3, 2)
    with pytest.raises(MismatchedAlgebra):
        AlgebraElement.unit(2, 2) + AlgebraElement.unit(2, 3)
    with pytest.raises(BoundExceeded):
        relation_suite(5, 6, bound=1000)
    with pytest.raises(ValueError):
        AlgebraElement.g(2, 2, 1) ** -1


def test_coefficients_are_polynomials_in_u():
    x = g_power(3, 2, 1, 3)
    assert all(c.uses_only_u() for _, c in x.items())
    assert x.coefficient(BasisWord(3, 2, (FrameLevel(0), TailLevel(1, 0)))) != Poly()
