"""The Yokonuma-Hecke algebra Y_{d,n}(u) on its inductive basis.

Every inductive basis word f_1 f_2 ... f_n, with level factor f_k either
t_k^m or g_{k-1} g_{k-2} ... g_i t_i^m, is a single standard monomial
t_1^{a_1} ... t_n^{a_n} g_w: the level-k framing is a_k, and the tails
spell the canonical reduced word of w, one coset factor per level.
Elements are therefore stored keyed by (a, w), with w a 0-based tuple of
images (w[j] = w(j)) satisfying g_w t_j = t_{w(j)} g_w.  Products are
formed by right multiplication with single generators.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .braids import FramedBraidWord, SplitFramedBraid, mod_reduce, split_form
from .errors import BoundExceeded, MismatchedAlgebra
from .poly import Monomial, Poly
from .report import SuiteReport

Key = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class FrameLevel:
    m: int

    def to_json_obj(self) -> dict:
        return {"F": self.m}


@dataclass(frozen=True)
class TailLevel:
    """g_{k-1} ... g_i t_i^m at level k."""

    i: int
    m: int

    def to_json_obj(self) -> dict:
        return {"G": [self.i, self.m]}


Level = Union[FrameLevel, TailLevel]


def _swap(w: tuple[int, ...], p: int) -> tuple[int, ...]:
    lst = list(w)
    lst[p], lst[p + 1] = lst[p + 1], lst[p]
    return tuple(lst)


@lru_cache(maxsize=None)
def levels_to_key(levels: tuple[Level, ...]) -> Key:
    n = len(levels)
    w = list(range(n))
    a = []
    for k, lev in enumerate(levels, start=1):
        if isinstance(lev, TailLevel):
            # right-compose with s_{k-1} s_{k-2} ... s_i
            for j in range(k - 1, lev.i - 1, -1):
                w[j - 1], w[j] = w[j], w[j - 1]
        a.append(lev.m)
    return tuple(a), tuple(w)


@lru_cache(maxsize=None)
def key_to_levels(key: Key) -> tuple[Level, ...]:
    a, w = key
    n = len(a)
    w = list(w)
    out: list[Level] = [None] * n  # type: ignore[list-item]
    for k in range(n, 1, -1):
        i = w.index(k - 1) + 1
        if i == k:
            out[k - 1] = FrameLevel(a[k - 1])
        else:
            out[k - 1] = TailLevel(i, a[k - 1])
            # peel the coset factor: right-compose with s_i s_{i+1} ... s_{k-1}
            for j in range(i, k):
                w[j - 1], w[j] = w[j], w[j - 1]
    out[0] = FrameLevel(a[0])
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical reduced word (1-based generator indices) of the permutation w."""
    levels = key_to_levels(((0,) * len(w), w))
    word: list[int] = []
    for k, lev in enumerate(levels, start=1):
        if isinstance(lev, TailLevel):
            word.extend(range(k - 1, lev.i - 1, -1))
    return tuple(word)


@dataclass(frozen=True)
class BasisWord:
    d: int
    n: int
    levels: tuple[Level, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        if len(self.levels) != self.n:
            raise ValueError("need one level per strand")
        if not isinstance(self.levels[0], FrameLevel):
            raise ValueError("level 1 must be a framing")
        for k, lev in enumerate(self.levels, start=1):
            if not 0 <= lev.m < self.d:
                raise ValueError(f"framing exponent {lev.m} not reduced mod {self.d}")
            if isinstance(lev, TailLevel) and not 1 <= lev.i < k:
                raise ValueError(f"tail index {lev.i} invalid at level {k}")

    @property
    def key(self) -> Key:
        return levels_to_key(self.levels)

    @classmethod
    def from_key(cls, d: int, key: Key) -> "BasisWord":
        return cls(d, len(key[0]), key_to_levels(key))

    def to_json_obj(self) -> list[dict]:
        return [lev.to_json_obj() for lev in self.levels]

    def __str__(self) -> str:
        parts = []
        for k, lev in enumerate(self.levels, start=1):
            if isinstance(lev, FrameLevel):
                if lev.m:
                    parts.append(f"t{k}^{lev.m}")
            else:
                gs = "".join(f"g{j}" for j in range(k - 1, lev.i - 1, -1))
                parts.append(gs + (f"t{lev.i}^{lev.m}" if lev.m else ""))
        return "".join(parts) or "1"


def enumerate_basis(d: int, n: int) -> Iterator[BasisWord]:
    """All d^n * n! inductive basis words of Y_{d,n}(u)."""
    choices = []
    for k in range(1, n + 1):
        opts: list[Level] = [FrameLevel(m) for m in range(d)]
        opts += [TailLevel(i, m) for i in range(1, k) for m in range(d)]
        choices.append(opts)
    for levels in itertools.product(*choices):
        yield BasisWord(d, n, levels)


def basis_size(d: int, n: int) -> int:
    size = d ** n
    for k in range(2, n + 1):
        size *= k
    return size


def _um1_over_d(d: int) -> Poly:
    return Poly({Monomial(1, 0, ()): Fraction(1, d), Monomial(0, 0, ()): Fraction(-1, d)})


def _acc(out: dict, key, val: Poly) -> None:
    cur = out.get(key)
    if cur is None:
        out[key] = val
    else:
        s = cur + val
        if s:
            out[key] = s
        else:
            del out[key]


class AlgebraElement:
    """A finite u-Laurent combination of inductive basis words of Y_{d,n}(u)."""

    __slots__ = ("d", "n", "_data")

    def __init__(self, d: int, n: int, data: Mapping[Key, Poly] | None = None):
        self.d = d
        self.n = n
        self._data: dict[Key, Poly] = {k: v for k, v in (data or {}).items() if v}

    # construction
    @classmethod
    def zero(cls, d: int, n: int) -> "AlgebraElement":
        return cls(d, n)

    @classmethod
    def unit(cls, d: int, n: int, coeff: Poly | int = 1) -> "AlgebraElement":
        c = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
        return cls(d, n, {((0,) * n, tuple(range(n))): c})

    @classmethod
    def framing(cls, d: int, n: int, exps: Iterable[int]) -> "AlgebraElement":
        a = tuple(e % d for e in exps)
        if len(a) != n:
            raise ValueError("need one framing exponent per strand")
        return cls(d, n, {(a, tuple(range(n))): Poly.const(1)})

    @classmethod
    def t(cls, d: int, n: int, j: int, m: int = 1) -> "AlgebraElement":
        if not 1 <= j <= n:
            raise IndexError(f"t_{j} not defined on {n} strands")
        exps = [0] * n
        exps[j - 1] = m
        return cls.framing(d, n, exps)

    @classmethod
    def g(cls, d: int, n: int, i: int) -> "AlgebraElement":
        _check_i(i, n)
        return cls.unit(d, n).mul_g(i)

    @classmethod
    def g_inv(cls, d: int, n: int, i: int) -> "AlgebraElement":
        _check_i(i, n)
        return cls.unit(d, n).mul_g_inv(i)

    @classmethod
    def from_basis_word(cls, b: BasisWord, coeff: Poly | int = 1) -> "AlgebraElement":
        c = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
        return cls(b.d, b.n, {b.key: c})

    # inspection
    @property
    def terms(self) -> dict[BasisWord, Poly]:
        return {BasisWord.from_key(self.d, k): v for k, v in self._data.items()}

    def items(self):
        return self._data.items()

    def __len__(self) -> int:
        return len(self._data)

    def __bool__(self) -> bool:
        return bool(self._data)

    def coefficient(self, b: BasisWord) -> Poly:
        return self._data.get(b.key, Poly())

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.d, self.n) == (other.d, other.n) and self._data == other._data

    def __hash__(self):
        return hash((self.d, self.n, frozenset(self._data.items())))

    def _check_same(self, other: "AlgebraElement") -> None:
        if (self.d, self.n) != (other.d, other.n):
            raise MismatchedAlgebra(f"Y_{{{self.d},{self.n}}} vs Y_{{{other.d},{other.n}}}")

    # linear structure
    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_same(other)
        out = dict(self._data)
        for k, v in other._data.items():
            _acc(out, k, v)
        return AlgebraElement(self.d, self.n, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.d, self.n, {k: -v for k, v in self._data.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c: Poly | Fraction | int) -> "AlgebraElement":
        if not isinstance(c, Poly):
            c = Poly.const(c)
        return AlgebraElement(self.d, self.n, {k: v * c for k, v in self._data.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, m: int) -> "AlgebraElement":
        if m < 0:
            raise ValueError("use g_power for negative powers of generators")
        out = AlgebraElement.unit(self.d, self.n)
        for _ in range(m):
            out = out * self
        return out

    # right multiplication by single generators
    def mul_t(self, j: int, m: int = 1) -> "AlgebraElement":
        """self * t_j^m."""
        d = self.d
        if m % d == 0:
            return self
        out: dict[Key, Poly] = {}
        for (a, w), c in self._data.items():
            pos = w[j - 1]
            a2 = list(a)
            a2[pos] = (a2[pos] + m) % d
            _acc(out, (tuple(a2), w), c)
        return AlgebraElement(d, self.n, out)

    def mul_e(self, i: int, k: int | None = None, shift: int = 0) -> "AlgebraElement":
        """self * (1/d) sum_s t_i^{shift+s} t_k^{-s}  (k defaults to i+1)."""
        d = self.d
        k = i + 1 if k is None else k
        inv_d = Fraction(1, d)
        out: dict[Key, Poly] = {}
        for (a, w), c in self._data.items():
            pi, pk = w[i - 1], w[k - 1]
            cc = c.scale(inv_d)
            for s in range(d):
                a2 = list(a)
                a2[pi] = (a2[pi] + shift + s) % d
                a2[pk] = (a2[pk] - s) % d
                _acc(out, (tuple(a2), w), cc)
        return AlgebraElement(d, self.n, out)

    def mul_g(self, i: int) -> "AlgebraElement":
        """self * g_i, rewritten with the quadratic relation when the length drops."""
        d = self.d
        p = i - 1
        um1d = _um1_over_d(d)
        out: dict[Key, Poly] = {}
        for (a, w), c in self._data.items():
            w2 = _swap(w, p)
            if w[p] < w[p + 1]:
                _acc(out, (a, w2), c)
                continue
            # g_w g_i = g_{w2} g_i^2 and g_{w2} e_i = e_{w2(i), w2(i+1)} g_{w2}
            _acc(out, (a, w2), c)
            cc = c * um1d
            neg = -cc
            A, B = w2[p], w2[p + 1]
            for s in range(d):
                a2 = list(a)
                a2[A] = (a2[A] + s) % d
                a2[B] = (a2[B] - s) % d
                t2 = tuple(a2)
                _acc(out, (t2, w2), cc)
                _acc(out, (t2, w), neg)
        return AlgebraElement(d, self.n, out)

    def mul_g_inv(self, i: int) -> "AlgebraElement":
        """self * g_i^{-1} = self * (g_i - (u^-1 - 1) e_i + (u^-1 - 1) e_i g_i)."""
        c = Poly.u(-1) - Poly.const(1)
        e_part = self.mul_e(i)
        return self.mul_g(i) - e_part.scale(c) + e_part.mul_g(i).scale(c)

    def with_strands(self, n: int) -> "AlgebraElement":
        """The natural image in Y_{d,n}(u) for n >= self.n (new strands unframed, uncrossed)."""
        if n < self.n:
            raise MismatchedAlgebra("cannot shrink strand count")
        pad = n - self.n
        extra = tuple(range(self.n, n))
        return AlgebraElement(self.d, n, {(a + (0,) * pad, w + extra): c for (a, w), c in self._data.items()})

    # serialization
    def to_json_obj(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].key)
        return {
            "d": self.d,
            "n": self.n,
            "terms": [{"levels": b.to_json_obj(), "coeff": c.to_json_obj()} for b, c in items],
        }

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "AlgebraElement":
        d, n = int(obj["d"]), int(obj["n"])
        data: dict[Key, Poly] = {}
        for t in obj["terms"]:
            levels = tuple(
                FrameLevel(int(lv["F"])) if "F" in lv else TailLevel(int(lv["G"][0]), int(lv["G"][1]))
                for lv in t["levels"]
            )
            _acc(data, BasisWord(d, n, levels).key, Poly.from_json_obj(t["coeff"]))
        return cls(d, n, data)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __repr__(self) -> str:
        return f"AlgebraElement(d={self.d}, n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._data:
            return "0"
        parts = []
        for k in sorted(self._data):
            parts.append(f"({self._data[k]})*{BasisWord.from_key(self.d, k)}")
        return " + ".join(parts)


def _check_i(i: int, n: int) -> None:
    if not 1 <= i < n:
        raise IndexError(f"g_{i} not defined on {n} strands")


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Normal-form product: fold each term t^c g_v of b into a, generator by generator."""
    a._check_same(b)
    d, n = a.d, a.n
    by_perm: dict[tuple[int, ...], AlgebraElement] = {}
    for (c, v), coeff in b._data.items():
        part = a
        for j, m in enumerate(c, start=1):
            if m:
                part = part.mul_t(j, m)
        part = part.scale(coeff)
        prev = by_perm.get(v)
        by_perm[v] = part if prev is None else prev + part
    result = AlgebraElement.zero(d, n)
    for v, part in by_perm.items():
        for i in reduced_word(v):
            part = part.mul_g(i)
        result = result + part
    return result


def embed_braid(w: SplitFramedBraid | FramedBraidWord, d: int) -> AlgebraElement:
    """Image of a framed braid under sigma_i -> g_i, t_j -> t_j (framings read mod d)."""
    if isinstance(w, FramedBraidWord):
        w = split_form(w)
    w = mod_reduce(w, d)
    x = AlgebraElement.framing(d, w.n, w.framings)
    for i, sign in w.braid_word:
        x = x.mul_g(i) if sign > 0 else x.mul_g_inv(i)
    return x


def random_element(d: int, n: int, rng, terms: int = 3, max_u: int = 2) -> AlgebraElement:
    """A sparse element with ``terms`` random basis words and small u-Laurent coefficients."""
    data: dict[Key, Poly] = {}
    for _ in range(terms):
        a = tuple(rng.randrange(d) for _ in range(n))
        w = list(range(n))
        rng.shuffle(w)
        coeff = Poly({Monomial(rng.randint(-max_u, max_u), 0, ()): rng.choice([-2, -1, 1, 2, 3])})
        _acc(data, (a, tuple(w)), coeff)
    return AlgebraElement(d, n, data)


# named elements

def e_idempotent(d: int, n: int, i: int) -> AlgebraElement:
    """e_{d,i} = (1/d) sum_m t_i^m t_{i+1}^{-m}."""
    _check_i(i, n)
    return AlgebraElement.unit(d, n).mul_e(i)


def e_pair(d: int, n: int, i: int, k: int) -> AlgebraElement:
    """e_{d,i,k} = (1/d) sum_s t_i^s t_k^{-s} for i != k."""
    if not (1 <= i <= n and 1 <= k <= n) or i == k:
        raise IndexError(f"e_{{d,{i},{k}}} not defined on {n} strands")
    return AlgebraElement.unit(d, n).mul_e(i, k)


def e_shift(d: int, n: int, i: int, k: int) -> AlgebraElement:
    """e_{d,i}^{(k)} = (1/d) sum_s t_i^{k+s} t_{i+1}^{d-s}."""
    _check_i(i, n)
    if not 0 <= k < d:
        raise IndexError(f"shift {k} outside 0..{d - 1}")
    return AlgebraElement.unit(d, n).mul_e(i, shift=k)


def _geometric_u(k: int, step: int) -> Poly:
    """sum_{l=0}^{k-1} u^{step*l}."""
    return Poly({Monomial(step * l, 0, ()): 1 for l in range(k)})


def power_coefficient(m: int) -> Poly:
    """The coefficient alpha_m, beta_m, alpha'_m or beta'_m of the closed form for g_i^m."""
    um1 = Poly.u() - Poly.const(1)
    uinv_m1 = Poly.u(-1) - Poly.const(1)
    if m >= 0:
        k = m // 2
        if m % 2 == 0:
            return um1 * _geometric_u(k, 2)
        return Poly.u() * um1 * _geometric_u(k, 2)
    k = (-m + 1) // 2
    if m % 2 == 0:
        k = -m // 2
        return Poly.u(-1) * uinv_m1 * _geometric_u(k, -2)
    return uinv_m1 * _geometric_u(k, -2)


def g_power(d: int, n: int, i: int, m: int) -> AlgebraElement:
    """Closed form of g_i^m: 1 + c e - c e g for even m, g - c e + c e g for odd m."""
    _check_i(i, n)
    e = e_idempotent(d, n, i)
    eg = e.mul_g(i)
    c = power_coefficient(m)
    if m % 2 == 0:
        return AlgebraElement.unit(d, n) + e.scale(c) - eg.scale(c)
    return AlgebraElement.g(d, n, i) - e.scale(c) + eg.scale(c)


# relation checks

def relation_suite(d: int, n: int, bound: int = 50_000) -> SuiteReport:
    """Verify the defining and derived relations of Y_{d,n}(u) as exact identities."""
    if basis_size(d, n) > bound:
        raise BoundExceeded(f"d^n n! = {basis_size(d, n)} exceeds {bound}")
    rep = SuiteReport(f"relations Y_{{{d},{n}}}(u)")
    one = AlgebraElement.unit(d, n)
    g = {i: AlgebraElement.g(d, n, i) for i in range(1, n)}
    gi = {i: AlgebraElement.g_inv(d, n, i) for i in range(1, n)}
    t = {j: AlgebraElement.t(d, n, j) for j in range(1, n + 1)}
    e = {i: e_idempotent(d, n, i) for i in range(1, n)}

    for j in range(1, n + 1):
        rep.add(f"t{j}^d = 1", t[j] ** d == one)
        for k in range(j + 1, n + 1):
            rep.add(f"t{j} t{k} = t{k} t{j}", t[j] * t[k] == t[k] * t[j])
    for i in range(1, n):
        rep.add(f"g{i} g{i}^-1 = 1", g[i] * gi[i] == one and gi[i] * g[i] == one)
        quad = one + e[i].scale(Poly.u() - 1) - (e[i] * g[i]).scale(Poly.u() - 1)
        rep.add(f"quadratic g{i}^2", g[i] * g[i] == quad)
        rep.add(f"e{i} idempotent", e[i] * e[i] == e[i])
        for j in range(1, n + 1):
            if j == i:
                ok = g[i] * t[i] == t[i + 1] * g[i]
            elif j == i + 1:
                ok = g[i] * t[i + 1] == t[i] * g[i]
            else:
                ok = g[i] * t[j] == t[j] * g[i]
            rep.add(f"mixed g{i} t{j}", ok)
            rep.add(f"t{j} e{i} = e{i} t{j}", t[j] * e[i] == e[i] * t[j])
        for j in range(1, n):
            rep.add(f"e{j} e{i} = e{i} e{j}", e[j] * e[i] == e[i] * e[j])
            if abs(i - j) >= 2:
                rep.add(f"g{i} g{j} = g{j} g{i}", g[i] * g[j] == g[j] * g[i])
            if j == i + 1:
                rep.add(f"braid g{i} g{j} g{i}", g[i] * g[j] * g[i] == g[j] * g[i] * g[j])
            for label, gens in (("g", g), ("g^-1", gi)):
                if j not in (i - 1, i + 1):
                    rep.add(f"{label}{j} e{i} = e{i} {label}{j}", gens[j] * e[i] == e[i] * gens[j])
                elif j == i - 1:
                    eik = e_pair(d, n, i - 1, i + 1)
                    rep.add(f"{label}{j} e{i} = e({i - 1},{i + 1}) {label}{j}", gens[j] * e[i] == eik * gens[j])
                    rep.add(f"e{i} {label}{j} = {label}{j} e({i - 1},{i + 1})", e[i] * gens[j] == gens[j] * eik)
                else:
                    eik = e_pair(d, n, i, i + 2)
                    rep.add(f"{label}{j} e{i} = e({i},{i + 2}) {label}{j}", gens[j] * e[i] == eik * gens[j])
                    rep.add(f"e{i} {label}{j} = {label}{j} e({i},{i + 2})", e[i] * gens[j] == gens[j] * eik)
    for i in range(1, n + 1):
        for k in range(i + 1, n + 1):
            eik = e_pair(d, n, i, k)
            rep.add(f"e({i},{k}) idempotent", eik * eik == eik)
            rep.add(f"e({i},{k}) = e({k},{i})", eik == e_pair(d, n, k, i))
    return rep
