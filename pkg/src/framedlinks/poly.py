"""Sparse exact polynomials in u (Laurent), z and x_1, x_2, ...

Coefficients are :class:`fractions.Fraction`.  The trace parameters x_k
are indexed by residues; ``x_0`` is never stored, it is the constant 1.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .errors import DivisionByZero

Rational = Fraction


class Monomial(NamedTuple):
    """u^u * z^z * prod x_k^e over the pairs (k, e) in ``x`` (sorted by k)."""

    u: int = 0
    z: int = 0
    x: tuple[tuple[int, int], ...] = ()

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        if not other.x:
            xs = self.x
        elif not self.x:
            xs = other.x
        else:
            acc = dict(self.x)
            for k, e in other.x:
                acc[k] = acc.get(k, 0) + e
            xs = tuple(sorted(acc.items()))
        return Monomial(self.u + other.u, self.z + other.z, xs)

    def x_exps(self) -> dict[int, int]:
        return dict(self.x)


ONE_MONO = Monomial()


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps Monomial -> Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    clean[m] = clean.get(m, Fraction(0)) + c
                    if not clean[m]:
                        del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Poly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def const(cls, c) -> "Poly":
        c = _coerce(c)
        return cls._raw({ONE_MONO: c} if c else {})

    @classmethod
    def u(cls, exp: int = 1) -> "Poly":
        return cls._raw({Monomial(exp, 0, ()): Fraction(1)})

    @classmethod
    def z(cls, exp: int = 1) -> "Poly":
        return cls._raw({Monomial(0, exp, ()): Fraction(1)})

    @classmethod
    def x(cls, k: int, d: int | None = None) -> "Poly":
        """The trace parameter x_k; with ``d`` given the index is read mod d."""
        if d is not None:
            k %= d
        if k == 0:
            return cls.const(1)
        if k < 0:
            raise ValueError("x index must be nonnegative unless d is given")
        return cls._raw({Monomial(0, 0, ((k, 1),)): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_MONO, Fraction(0))

    # arithmetic
    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.const(other) - self

    def scale(self, c) -> "Poly":
        c = _coerce(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            if mb == ONE_MONO:
                return self.scale(cb) if a is self._terms else other.scale(cb)
            return Poly._raw({ma * mb: ca * cb for ma, ca in a.items()})
        out: dict[Monomial, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma * mb
                v = out.get(m)
                out[m] = ca * cb if v is None else v + ca * cb
        return Poly._raw({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            if len(self._terms) == 1:
                ((m, c),) = self._terms.items()
                if m.z == 0 and not m.x:
                    return Poly._raw({Monomial(m.u * n, 0, ()): 1 / c ** -n})
            raise ValueError("only u-monomials can be inverted")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # inspection
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items())

    def variables_x(self) -> set[int]:
        return {k for m in self._terms for k, _ in m.x}

    def uses_only_u(self) -> bool:
        return all(m.z == 0 and not m.x for m in self._terms)

    def min_u_exp(self) -> int:
        return min((m.u for m in self._terms), default=0)

    # substitution
    def map_x(self, index_map: Callable[[int], int]) -> "Poly":
        """Ring map sending x_k to x_{index_map(k)} (an image 0 means 1)."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            acc: dict[int, int] = {}
            for k, e in m.x:
                j = index_map(k)
                if j:
                    acc[j] = acc.get(j, 0) + e
            nm = Monomial(m.u, m.z, tuple(sorted(acc.items())))
            out[nm] = out.get(nm, Fraction(0)) + c
        return Poly(out)

    def eval(self, u: complex = 1, z: complex = 0, x: Sequence[complex] | Mapping[int, complex] = ()) -> complex:
        """Numeric value at (u, z, x); ``x`` is indexed by residue, x[0] ignored.

        A sequence ``x`` of length d is read as (x_0, x_1, ..., x_{d-1}).
        """
        if isinstance(x, Mapping):
            xv = x
        else:
            xv = {k: complex(v) for k, v in enumerate(x)}
        u = complex(u)
        z = complex(z)
        total = 0j
        upow: dict[int, complex] = {}
        for m, c in self._terms.items():
            if m.u < 0 and u == 0:
                raise DivisionByZero("negative power of u evaluated at u = 0")
            val = upow.get(m.u)
            if val is None:
                val = upow[m.u] = u ** m.u if m.u >= 0 else 1 / u ** (-m.u)
            if m.z:
                val *= z ** m.z
            for k, e in m.x:
                val *= xv[k] ** e
            total += val * float(c)
        return total

    # serialization
    def to_json_obj(self) -> list[dict]:
        return [
            {"coeff": f"{c.numerator}/{c.denominator}", "u": m.u, "z": m.z,
             "x": {str(k): e for k, e in m.x}}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "Poly":
        terms: dict[Monomial, Fraction] = {}
        for t in obj:
            xs = tuple(sorted((int(k), int(e)) for k, e in t.get("x", {}).items() if int(e)))
            m = Monomial(int(t.get("u", 0)), int(t.get("z", 0)), xs)
            terms[m] = terms.get(m, Fraction(0)) + Fraction(t["coeff"])
        return cls(terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            if m.u:
                factors.append("u" if m.u == 1 else f"u^{m.u}")
            if m.z:
                factors.append("z" if m.z == 1 else f"z^{m.z}")
            for k, e in m.x:
                factors.append(f"x{k}" if e == 1 else f"x{k}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Poly()
ONE = Poly.const(1)

