"""Functions on Z/dZ, convolution and Fourier transform, and the E-system.

A vector x = (x_0, ..., x_{d-1}) with x_0 = 1 solves the E-system exactly
when x * x = (x * x)(0) x under convolution.  Taking Fourier transforms, the
solutions are the normalized characteristic sums

    x_S(k) = (1/|S|) sum_{s in S} exp(2 pi i s k / d)

over nonempty subsets S of Z/dZ.
"""
from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundExceeded, DegenerateOrder, IncompatibleOrders, MismatchedOrder
from .report import SuiteReport

MAX_ENUMERATION_ORDER = 20


def _root(d: int, k: int) -> complex:
    """exp(2 pi i k / d), exact at the obvious real and imaginary points."""
    k %= d
    if k == 0:
        return 1 + 0j
    if 2 * k == d:
        return -1 + 0j
    if 4 * k == d:
        return 1j
    if 4 * k == 3 * d:
        return -1j
    return cmath.exp(2j * cmath.pi * k / d)


@dataclass(frozen=True)
class CyclicFn:
    """A complex function on Z/dZ stored as its values at 0..d-1."""

    d: int
    values: tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        if len(vals) != self.d:
            raise MismatchedOrder(f"{len(vals)} values for order {self.d}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def delta(cls, d: int, a: int) -> "CyclicFn":
        return cls(d, tuple(1 if k == a % d else 0 for k in range(d)))

    @classmethod
    def character(cls, d: int, a: int) -> "CyclicFn":
        """e_a : k -> exp(2 pi i a k / d)."""
        return cls(d, tuple(_root(d, a * k) for k in range(d)))

    def __call__(self, k: int) -> complex:
        return self.values[k % self.d]

    def _check(self, other: "CyclicFn") -> None:
        if self.d != other.d:
            raise MismatchedOrder(f"orders {self.d} and {other.d}")

    def __add__(self, other: "CyclicFn") -> "CyclicFn":
        self._check(other)
        return CyclicFn(self.d, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "CyclicFn") -> "CyclicFn":
        self._check(other)
        return CyclicFn(self.d, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c: complex) -> "CyclicFn":
        return CyclicFn(self.d, tuple(c * a for a in self.values))

    def pointwise(self, other: "CyclicFn") -> "CyclicFn":
        self._check(other)
        return CyclicFn(self.d, tuple(a * b for a, b in zip(self.values, other.values)))

    def reflect(self) -> "CyclicFn":
        """k -> f(-k)."""
        return CyclicFn(self.d, tuple(self(-k) for k in range(self.d)))

    def max_abs(self) -> float:
        return max(abs(v) for v in self.values)

    def distance(self, other: "CyclicFn") -> float:
        return (self - other).max_abs()


def convolve(f: CyclicFn, g: CyclicFn) -> CyclicFn:
    """(f * g)(w) = sum_{u + v = w} f(u) g(v)."""
    f._check(g)
    d = f.d
    out = [0j] * d
    for a, fa in enumerate(f.values):
        if fa == 0:
            continue
        for b, gb in enumerate(g.values):
            out[(a + b) % d] += fa * gb
    return CyclicFn(d, tuple(out))


def dft(f: CyclicFn) -> CyclicFn:
    """f^(v) = sum_u f(u) exp(-2 pi i u v / d), by direct summation."""
    d = f.d
    return CyclicFn(d, tuple(sum(f.values[u] * _root(d, -u * v) for u in range(d)) for v in range(d)))


def e_residual(x: CyclicFn) -> float:
    """max_m |(x*x)(m) - (x*x)(0) x(m)|; zero exactly on E-system solutions."""
    xx = convolve(x, x)
    c = xx(0)
    return max(abs(xx(m) - c * x(m)) for m in range(x.d))


@dataclass(frozen=True)
class ESolution:
    support: tuple[int, ...]
    values: CyclicFn

    @property
    def d(self) -> int:
        return self.values.d

    @property
    def trivial(self) -> bool:
        return len(self.support) == self.d

    @property
    def E(self) -> float:
        """The normalized E_d = tr(e_{d,i}) at this solution, equal to 1/|S|."""
        return 1 / len(self.support)

    def x(self, k: int) -> complex:
        return self.values(k)

    def x_vector(self) -> tuple[complex, ...]:
        return self.values.values

    def residual(self) -> float:
        return e_residual(self.values)

    def bitmask(self) -> int:
        return sum(1 << s for s in self.support)

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "support": list(self.support),
            "values": [[v.real, v.imag] for v in self.values.values],
            "residual": self.residual(),
        }

    @classmethod
    def from_json_obj(cls, obj) -> "ESolution":
        vals = tuple(complex(re, im) for re, im in obj["values"])
        return cls(tuple(obj["support"]), CyclicFn(int(obj["d"]), vals))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def subset_solution(d: int, support: Iterable[int]) -> ESolution:
    """x_S = (1/|S|) sum_{s in S} e_s."""
    S = tuple(sorted({s % d for s in support}))
    if not S:
        raise ValueError("support must be nonempty")
    vals = []
    for k in range(d):
        vals.append(sum(_root(d, s * k) for s in S) / len(S))
    return ESolution(S, CyclicFn(d, tuple(vals)))


def solution_from_mask(d: int, mask: int) -> ESolution:
    if not 0 < mask < (1 << d):
        raise ValueError(f"bitmask {mask:#b} is not a nonempty subset of Z/{d}Z")
    return subset_solution(d, [s for s in range(d) if mask >> s & 1])


def solve_all(d: int) -> list[ESolution]:
    """All 2^d - 1 solutions, in increasing bitmask order of their supports."""
    if d < 1:
        raise ValueError("order must be positive")
    if d > MAX_ENUMERATION_ORDER:
        raise BoundExceeded(f"2^{d} subsets is beyond the enumeration bound d <= {MAX_ENUMERATION_ORDER}")
    return [solution_from_mask(d, mask) for mask in range(1, 1 << d)]


def delta_solution(d: int) -> ESolution:
    """The real solution x_i = -(-1)^{i(d-1)}/(d-1): support drops 0 (d odd) or d/2 (d even)."""
    if d < 2:
        raise DegenerateOrder("the delta solution needs d >= 2")
    drop = 0 if d % 2 else d // 2
    return subset_solution(d, [s for s in range(d) if s != drop])


def delta_values(d: int) -> tuple[float, ...]:
    """The closed form -(-1)^{i(d-1)}/(d-1) for i != 0, with x_0 = 1."""
    if d < 2:
        raise DegenerateOrder("the delta solution needs d >= 2")
    return (1.0,) + tuple(-((-1) ** (i * (d - 1))) / (d - 1) for i in range(1, d))


def cyclic_solution(d: int, a: int) -> ESolution:
    """x_k = zeta^{a k}, the one-point support {a}."""
    if not 0 <= a < d:
        raise IndexError(f"residue {a} outside 0..{d - 1}")
    return subset_solution(d, [a])


def lift_solution(x: ESolution, d_new: int) -> ESolution:
    """Periodic extension x'_j = x_{j mod d} to order d_new, a multiple of d."""
    d = x.d
    if d_new < d or d_new % d:
        raise IncompatibleOrders(f"{d} does not divide {d_new}")
    step = d_new // d
    vals = tuple(x.values(j) for j in range(d_new))
    return ESolution(tuple(s * step for s in x.support), CyclicFn(d_new, vals))


def parse_selector(text: str, d: int) -> ESolution:
    """'0b101' / '5' subset bitmask, 'delta', or 'cyclic:a'."""
    t = text.strip().lower()
    if t == "delta":
        return delta_solution(d)
    if t.startswith("cyclic:"):
        return cyclic_solution(d, int(t.split(":", 1)[1]))
    return solution_from_mask(d, int(t, 0))


def fourier_support(x: CyclicFn, tol: float = 1e-9) -> tuple[int, ...]:
    return tuple(k for k, v in enumerate(dft(x).values) if abs(v) > tol)


def max_deviation(a: Sequence[complex], b: Sequence[complex]) -> float:
    return max(abs(complex(p) - complex(q)) for p, q in zip(a, b))


def esystem_suite(d: int, tol: float = 1e-10) -> SuiteReport:
    """Residuals, Fourier support, complements and the delta solution for order d."""
    rep = SuiteReport(f"E-system, d = {d}")
    sols = solve_all(d)
    rep.add("solution count 2^d - 1", len(sols) == 2 ** d - 1, str(len(sols)))
    rep.add("all residuals small", all(s.residual() < tol for s in sols),
            f"max {max(s.residual() for s in sols):.1e}")
    full = set(range(d))
    fourier_ok = complement_ok = norm_ok = True
    for s in sols:
        ind = CyclicFn(d, tuple(d / len(s.support) if k in s.support else 0 for k in range(d)))
        fourier_ok &= dft(s.values).distance(ind) < tol
        xx0 = convolve(s.values, s.values)(0)
        norm_ok &= abs(xx0 * len(s.support) / d - 1) < tol
        if len(s.support) < d:
            comp = subset_solution(d, full - set(s.support))
            complement_ok &= comp.residual() < tol
    rep.add("dft(x_S) = (d/|S|) 1_S", fourier_ok)
    rep.add("|S| (x*x)(0)/d = 1", norm_ok)
    rep.add("complements are solutions", complement_ok)
    if d >= 2:
        ds = delta_solution(d)
        rep.add("delta solution closed form", max_deviation(ds.x_vector(), delta_values(d)) < tol)
        rep.add("E_d(delta) = 1/(d-1)", abs(ds.E - 1 / (d - 1)) < tol)
    return rep
