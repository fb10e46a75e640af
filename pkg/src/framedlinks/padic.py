"""Finite-depth models of p-adic inverse limits.

Level r means modulus p^r.  A depth-R prefix (y_1, ..., y_R) models an
element of an inverse limit, and coherence under the connecting maps is
checked on construction:

* residues: a_r = a_s mod p^s,
* algebra elements: phi_s^r reduces framing exponents mod p^s,
* trace polynomials: delta_s^r sends x_a to x_{a mod p^s}.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .braids import FramedBraidWord, SplitFramedBraid, split_form
from .errors import BoundExceeded, LevelError, ParamDomainError
from .esystem import ESolution, lift_solution
from .invariants import InvariantParams, gamma
from .poly import Poly
from .report import SuiteReport
from .trace import trace
from .yokonuma import AlgebraElement, Key, basis_size, e_idempotent, enumerate_basis, random_element

MAX_MODULUS = 4096


def level_of(d: int, p: int) -> int:
    """r with p^r = d."""
    r, q = 0, 1
    while q < d:
        q *= p
        r += 1
    if q != d:
        raise LevelError(f"{d} is not a power of {p}")
    return r


# p-adic integers

@dataclass(frozen=True)
class PAdicIntApprox:
    """Residues a_1..a_R with a_r in Z/p^r Z, pairwise coherent."""

    p: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be at least 2")
        if not self.residues:
            raise ValueError("depth must be at least 1")
        res = tuple(int(a) % self.p ** (r + 1) for r, a in enumerate(self.residues))
        for r in range(1, len(res)):
            if res[r] % self.p ** r != res[r - 1]:
                raise LevelError(f"residues at levels {r} and {r + 1} are not coherent")
        object.__setattr__(self, "residues", res)

    @classmethod
    def from_int(cls, p: int, depth: int, value: int) -> "PAdicIntApprox":
        return cls(p, tuple(value % p ** r for r in range(1, depth + 1)))

    @classmethod
    def from_digits(cls, p: int, digits: Sequence[int]) -> "PAdicIntApprox":
        """From the expansion a = sum_k digits[k] p^k with 0 <= digits[k] < p."""
        if any(not 0 <= c < p for c in digits):
            raise ValueError("digits must lie in 0..p-1")
        acc, res = 0, []
        for k, c in enumerate(digits):
            acc += c * p ** k
            res.append(acc)
        return cls(p, tuple(res))

    @property
    def depth(self) -> int:
        return len(self.residues)

    def digits(self) -> tuple[int, ...]:
        """The unique expansion digits c_0..c_{R-1}."""
        a, out = self.residues[-1], []
        for _ in range(self.depth):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def at(self, r: int) -> int:
        """theta_r: the residue at level r."""
        if not 1 <= r <= self.depth:
            raise LevelError(f"level {r} outside 1..{self.depth}")
        return self.residues[r - 1]

    def _check(self, other: "PAdicIntApprox") -> int:
        if self.p != other.p:
            raise LevelError(f"primes {self.p} and {other.p} differ")
        return min(self.depth, other.depth)

    def __add__(self, other: "PAdicIntApprox") -> "PAdicIntApprox":
        R = self._check(other)
        return PAdicIntApprox(self.p, tuple(self.residues[r] + other.residues[r] for r in range(R)))

    def __neg__(self) -> "PAdicIntApprox":
        return PAdicIntApprox(self.p, tuple(-a for a in self.residues))

    def __sub__(self, other: "PAdicIntApprox") -> "PAdicIntApprox":
        return self + (-other)

    def __mul__(self, other: "PAdicIntApprox") -> "PAdicIntApprox":
        R = self._check(other)
        return PAdicIntApprox(self.p, tuple(self.residues[r] * other.residues[r] for r in range(R)))

    def to_json_obj(self) -> dict:
        return {"p": self.p, "depth": self.depth,
                "entries": [{"level": r + 1, "residue": a} for r, a in enumerate(self.residues)]}


# connecting maps on algebra elements

def _reduce_keys(y: AlgebraElement, q: int) -> dict[Key, Poly]:
    out: dict[Key, Poly] = {}
    for (a, w), c in y.items():
        key = (tuple(e % q for e in a), w)
        s = out.get(key, Poly()) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def phi(r: int, s: int, y: AlgebraElement, p: int | None = None) -> AlgebraElement:
    """phi_s^r : Y_{p^r,n} -> Y_{p^s,n}, framing exponents read mod p^s."""
    if p is None:
        p = _prime_for(y.d, r)
    if y.d != p ** r:
        raise LevelError(f"element has modulus {y.d}, expected {p}^{r}")
    if not 0 <= s <= r:
        raise LevelError(f"need 0 <= s <= r, got s={s}, r={r}")
    q = p ** s
    return AlgebraElement(q, y.n, _reduce_keys(y, q))


def _prime_for(d: int, r: int) -> int:
    if r < 1:
        raise LevelError("level must be positive to infer p")
    p = round(d ** (1 / r))
    for cand in (p - 1, p, p + 1):
        if cand >= 2 and cand ** r == d:
            return cand
    raise LevelError(f"{d} is not an r-th power for r = {r}")


def truncate(y: AlgebraElement, s: int, p: int) -> AlgebraElement:
    """Read a reduced element of Y_{p^r,n} at the lower level s (same as phi)."""
    r = level_of(y.d, p)
    if s > r or s < 0:
        raise LevelError(f"cannot truncate level {r} to level {s}")
    return phi(r, s, y, p)


def expand(y: AlgebraElement, r: int, p: int) -> AlgebraElement:
    """Read a reduced element of Y_{p^s,n} at level r >= s: exponents 0..p^s-1 kept as is."""
    s = level_of(y.d, p)
    if r < s:
        raise LevelError(f"cannot expand level {s} to level {r}")
    return AlgebraElement(p ** r, y.n, dict(y.items()))


def zeta(p: int, level: int, source: int, n: int, i: int) -> AlgebraElement:
    """(1/p^source) sum_{m < p^source} t_i^m t_{i+1}^{-m} written at level ``level``.

    For source <= level this is the first packet of e_{p^level,i}; for
    source >= level it equals e_{p^level,i}.
    """
    d, q = p ** level, p ** source
    out = AlgebraElement.zero(d, n)
    for m in range(q):
        out = out + AlgebraElement.t(d, n, i, m).mul_t(i + 1, -m)
    return out.scale(Fraction(1, q))


def e_packets(p: int, r: int, s: int, n: int, i: int) -> list[AlgebraElement]:
    """The p^{r-s} packets (1/p^s) sum_{m in block j} t_i^m t_{i+1}^{-m} of e_{p^r,i}."""
    if s > r:
        raise LevelError("packets need s <= r")
    d, q = p ** r, p ** s
    out = []
    for j in range(p ** (r - s)):
        pk = AlgebraElement.zero(d, n)
        for m in range(j * q, (j + 1) * q):
            pk = pk + AlgebraElement.t(d, n, i, m).mul_t(i + 1, -m)
        out.append(pk.scale(Fraction(1, q)))
    return out


# coherent algebra sequences

@dataclass(frozen=True)
class PAdicAlgebraApprox:
    p: int
    n: int
    entries: tuple[AlgebraElement, ...]
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        for r, y in enumerate(self.entries, start=1):
            if y.d != self.p ** r or y.n != self.n:
                raise LevelError(f"entry {r} lives in Y_{{{y.d},{y.n}}}, expected Y_{{{self.p ** r},{self.n}}}")
        if self.check and not self.is_coherent():
            raise LevelError("entries are not coherent under the connecting maps")

    @property
    def depth(self) -> int:
        return len(self.entries)

    def entry(self, r: int) -> AlgebraElement:
        return self.entries[r - 1]

    def is_coherent(self) -> bool:
        # consecutive levels suffice since phi_s^r = phi_s^{s+1} o ... o phi_{r-1}^r
        return all(phi(r + 1, r, self.entries[r], self.p) == self.entries[r - 1]
                   for r in range(1, self.depth))

    @classmethod
    def constant(cls, p: int, depth: int, y: AlgebraElement) -> "PAdicAlgebraApprox":
        """The sequence obtained by reading one reduced formal expression at every level."""
        r0 = level_of(y.d, p)
        entries = []
        for r in range(1, depth + 1):
            entries.append(truncate(y, r, p) if r <= r0 else expand(y, r, p))
        return cls(p, y.n, tuple(entries))

    def constant_approximant(self, r: int) -> "PAdicAlgebraApprox":
        """The constant sequence built from the formal expression of the r-th entry."""
        return PAdicAlgebraApprox.constant(self.p, self.depth, self.entry(r))

    def __sub__(self, other: "PAdicAlgebraApprox") -> "PAdicAlgebraApprox":
        return PAdicAlgebraApprox(self.p, self.n, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __add__(self, other: "PAdicAlgebraApprox") -> "PAdicAlgebraApprox":
        return PAdicAlgebraApprox(self.p, self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __mul__(self, other: "PAdicAlgebraApprox") -> "PAdicAlgebraApprox":
        return PAdicAlgebraApprox(self.p, self.n, tuple(a * b for a, b in zip(self.entries, other.entries)))

    def zero_prefix(self) -> int:
        """Number of leading zero entries."""
        k = 0
        for y in self.entries:
            if y:
                break
            k += 1
        return k

    def to_json_obj(self) -> dict:
        return {"p": self.p, "depth": self.depth,
                "entries": [{"level": r, "element": y.to_json_obj()} for r, y in enumerate(self.entries, start=1)]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def e_padic(p: int, depth: int, n: int, i: int) -> PAdicAlgebraApprox:
    """The coherent sequence (e_{p,i}, e_{p^2,i}, ..., e_{p^depth,i})."""
    if p ** depth > MAX_MODULUS:
        raise BoundExceeded(f"{p}^{depth} exceeds the modulus bound {MAX_MODULUS}")
    return PAdicAlgebraApprox(p, n, tuple(e_idempotent(p ** r, n, i) for r in range(1, depth + 1)))


# trace sequences

def delta_map(r: int, s: int, poly: Poly, p: int) -> Poly:
    """delta_s^r : x_a -> x_{a mod p^s}."""
    if s > r:
        raise LevelError("delta needs s <= r")
    q = p ** s
    return poly.map_x(lambda a: a % q)


@dataclass(frozen=True)
class PolySeqApprox:
    p: int
    entries: tuple[Poly, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.is_coherent():
            raise LevelError("trace polynomials are not delta-coherent")

    @property
    def depth(self) -> int:
        return len(self.entries)

    def is_coherent(self) -> bool:
        return all(delta_map(r + 1, r, self.entries[r], self.p) == self.entries[r - 1]
                   for r in range(1, self.depth))

    def to_json_obj(self) -> dict:
        return {"p": self.p, "depth": self.depth,
                "entries": [{"level": r, "poly": q.to_json_obj()} for r, q in enumerate(self.entries, start=1)]}


def tau_prefix(y: PAdicAlgebraApprox) -> PolySeqApprox:
    """Entrywise tr_{p^r}; construction re-verifies delta-coherence of the result."""
    return PolySeqApprox(y.p, tuple(trace(e) for e in y.entries))


def commute_check(p: int, depth: int, n: int, sample: int = 200, seed: int = 0,
                  full_limit: int = 4, bound: int = 50_000) -> SuiteReport:
    """delta_s^r(tr_{p^r}(y)) = tr_{p^s}(phi_s^r(y)) for all s <= r <= depth."""
    rng = random.Random(seed)
    rep = SuiteReport(f"trace/connecting-map commutation, p={p}, n={n}")
    memo: dict[int, dict] = {}
    for r in range(1, depth + 1):
        d = p ** r
        if basis_size(d, n) > bound:
            raise BoundExceeded(f"Y_{{{d},{n}}} exceeds {bound} basis words")
        if d <= full_limit:
            ys = [AlgebraElement.from_basis_word(b) for b in enumerate_basis(d, n)]
            label = "full basis"
        else:
            ys = [random_element(d, n, rng) for _ in range(sample)]
            label = f"{sample} random"
        traces = [trace(y, memo.setdefault(d, {})) for y in ys]
        for s in range(1, r + 1):
            q = p ** s
            ok = all(delta_map(r, s, t, p) == trace(phi(r, s, y, p), memo.setdefault(q, {}))
                     for y, t in zip(ys, traces))
            rep.add(f"r={r} s={s} ({label})", ok)
    return rep


@dataclass
class StabilizationReport(SuiteReport):
    r0: int = 1
    values: list = field(default_factory=list)

    def to_json_obj(self) -> dict:
        obj = super().to_json_obj()
        obj["r0"] = self.r0
        obj["gamma"] = [[v.real, v.imag] for v in self.values]
        return obj


def gamma_stabilization(w: FramedBraidWord | SplitFramedBraid, p: int, depth: int,
                        base_solution: ESolution, u: complex = 2, z: complex = 0.5,
                        branch: str = "principal", tol: float = 1e-8) -> StabilizationReport:
    """Gamma_{p^r} of the closure of w for r = 1..depth with level-wise lifted solutions."""
    if base_solution.d != p:
        raise ParamDomainError(f"base solution has order {base_solution.d}, expected {p}")
    sw = split_form(w) if isinstance(w, FramedBraidWord) else w
    top = max((abs(a) for a in sw.framings), default=0)
    r0 = 1
    while p ** r0 <= top:
        r0 += 1
    rep = StabilizationReport(f"Gamma_(p^r) stabilization, p={p}, r0={r0}", r0=r0)
    for r in range(1, depth + 1):
        sol = lift_solution(base_solution, p ** r)
        params = InvariantParams(p ** r, sol, u, z, branch)
        rep.values.append(gamma(sw, params))
    rep.add("r0 within depth", r0 <= depth, f"r0 = {r0}, depth = {depth}")
    if r0 <= depth:
        ref = rep.values[r0 - 1]
        for r in range(r0, depth + 1):
            v = rep.values[r - 1]
            ok = abs(v - ref) <= tol * (1 + abs(ref))
            rep.add(f"level {r}", ok, f"{v.real:.10g}{v.imag:+.10g}j")
    return rep


def padic_suite(p: int, depth: int, n: int = 2, sample: int = 50, seed: int = 0) -> SuiteReport:
    """Coherence of e_{p^infty,i}, its packets and approximants, and trace commutation."""
    rep = SuiteReport(f"p-adic prefixes, p={p}, depth={depth}")
    seq = e_padic(p, depth, n, 1)
    rep.add("e_(p^r) sequence coherent", seq.is_coherent())
    rep.add("e_(p^r) idempotent at each level", all(e * e == e for e in seq.entries))
    packets_ok = True
    for r in range(1, depth + 1):
        for s in range(1, r + 1):
            pk = e_packets(p, r, s, n, 1)
            packets_ok &= len(pk) == p ** (r - s)
            packets_ok &= all(phi(r, s, q, p) == seq.entry(s) for q in pk)
            packets_ok &= phi(r, s, zeta(p, r, s, n, 1), p) == seq.entry(s)
    rep.add("packets project onto e_(p^s)", packets_ok)
    rep.add("approximants zero the first r positions",
            all((seq - seq.constant_approximant(r)).zero_prefix() >= r for r in range(1, depth + 1)))
    tau = tau_prefix(seq)
    rep.add("tau prefix delta-coherent", tau.is_coherent())
    rep.extend(commute_check(p, depth, n, sample=sample, seed=seed), "commute: ")
    return rep
