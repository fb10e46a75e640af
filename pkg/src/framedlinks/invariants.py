"""The framed-link invariant Gamma_d and its verification.

Gamma_d(closure of a) = Delta^{n-1} (sqrt w)^{eps(a)} tr_d(a), evaluated at an
E-system solution, where w = (z + (u-1)E_d)/(uz) and Delta = 1/(z sqrt w).
The trace is computed symbolically once per braid and then evaluated.
"""
from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .braids import Frame, FramedBraidWord, Sigma, SplitFramedBraid, mod_reduce, split_form
from .errors import MismatchedOrder, ParamDomainError
from .esystem import ESolution, solve_all
from .homflypt import homflypt_value
from .poly import Poly
from .report import SuiteReport
from .trace import trace
from .yokonuma import embed_braid

BRANCHES = ("principal", "negated")


@dataclass(frozen=True)
class InvariantParams:
    d: int
    solution: ESolution
    u: complex = 2
    z: complex = 0.5
    sqrt_branch: str = "principal"

    def __post_init__(self):
        object.__setattr__(self, "u", complex(self.u))
        object.__setattr__(self, "z", complex(self.z))
        if self.solution.d != self.d:
            raise MismatchedOrder(f"solution of order {self.solution.d} used with d = {self.d}")
        if self.sqrt_branch not in BRANCHES:
            raise ParamDomainError(f"branch must be one of {BRANCHES}")
        if self.u == 0 or self.u == 1:
            raise ParamDomainError("u must avoid 0 and 1")
        if self.z == 0:
            raise ParamDomainError("z must be nonzero")
        if self.omega == 0:
            raise ParamDomainError("omega = (z + (u-1)E_d)/(uz) vanishes")

    @property
    def E(self) -> float:
        return self.solution.E

    @property
    def omega(self) -> complex:
        return (self.z + (self.u - 1) * self.E) / (self.u * self.z)

    @property
    def sqrt_omega(self) -> complex:
        root = cmath.sqrt(self.omega)
        return root if self.sqrt_branch == "principal" else -root

    @property
    def Delta(self) -> complex:
        w, r = self.omega, self.sqrt_omega
        return (1 - w * self.u) / (r * (1 - self.u) * self.E)

    def x(self, k: int) -> complex:
        return self.solution.x(k)

    def E_shift(self, m: int) -> complex:
        """E_d^{(m)} evaluated directly from the solution values."""
        d = self.d
        return sum(self.x(m + s) * self.x(-s) for s in range(d)) / d

    def with_branch(self, branch: str) -> "InvariantParams":
        return InvariantParams(self.d, self.solution, self.u, self.z, branch)

    def evaluate(self, p: Poly) -> complex:
        return p.eval(self.u, self.z, self.solution.x_vector())


@lru_cache(maxsize=4096)
def _cached_trace(w: SplitFramedBraid, d: int) -> Poly:
    return trace(embed_braid(w, d))


def braid_trace(w: FramedBraidWord | SplitFramedBraid, d: int) -> Poly:
    """Symbolic tr_d of the image of a framed braid in Y_{d,n}(u)."""
    if isinstance(w, FramedBraidWord):
        w = split_form(w)
    return _cached_trace(mod_reduce(w, d), d)


def gamma(w: FramedBraidWord | SplitFramedBraid, params: InvariantParams) -> complex:
    if isinstance(w, FramedBraidWord):
        w = split_form(w)
    n, eps = w.n, w.exponent()
    value = params.evaluate(braid_trace(w, params.d))
    return params.Delta ** (n - 1) * params.sqrt_omega ** eps * value


def gamma_json(text: str, w: FramedBraidWord, params: InvariantParams) -> dict:
    g = gamma(w, params)
    return {
        "braid": text,
        "d": params.d,
        "support": list(params.solution.support),
        "u": [params.u.real, params.u.imag],
        "z": [params.z.real, params.z.imag],
        "branch": params.sqrt_branch,
        "gamma": [g.real, g.imag],
        "epsilon": split_form(w).exponent(),
        "strands": w.n,
    }


# closed forms of small framed links, independent of the trace engine

@dataclass(frozen=True)
class Unknot:
    k: int = 0

    def braid(self) -> FramedBraidWord:
        return FramedBraidWord(1, (Frame(1, self.k),))


@dataclass(frozen=True)
class Hopf:
    k: int = 0
    l: int = 0

    def braid(self) -> FramedBraidWord:
        return FramedBraidWord(2, (Sigma(1), Sigma(1), Frame(1, self.k), Frame(2, self.l)))


@dataclass(frozen=True)
class TrefoilR:
    k: int = 0

    def braid(self) -> FramedBraidWord:
        return FramedBraidWord(2, (Sigma(1),) * 3 + (Frame(1, self.k),))


@dataclass(frozen=True)
class TrefoilL:
    k: int = 0

    def braid(self) -> FramedBraidWord:
        return FramedBraidWord(2, (Sigma(1, -1),) * 3 + (Frame(1, self.k),))


SmallLink = Union[Unknot, Hopf, TrefoilR, TrefoilL]


def closed_form(link: SmallLink, params: InvariantParams) -> complex:
    u, z, x, E = params.u, params.z, params.x, params.E_shift
    r, D = params.sqrt_omega, params.Delta
    if isinstance(link, Unknot):
        return x(link.k)
    if isinstance(link, Hopf):
        k, l = link.k, link.l
        return D * r ** 2 * (x(k) * x(l) + (u - 1) * E(k + l) - (u - 1) * z * x(k + l))
    if isinstance(link, TrefoilR):
        k = link.k
        return D * r ** 3 * ((u * u - u + 1) * z * x(k) - u * (u - 1) * E(k))
    if isinstance(link, TrefoilL):
        k = link.k
        c = u ** -3 - u ** -2 + u ** -1
        return D * r ** -3 * (c * z * x(k) - (c - 1) * E(k))
    raise TypeError(f"unknown link {link!r}")


# verification

def _close(a: complex, b: complex, tol: float) -> bool:
    return abs(a - b) <= tol * (1 + max(abs(a), abs(b)))


def random_framed_word(n: int, length: int, rng: random.Random, max_frame: int = 3) -> FramedBraidWord:
    letters = []
    for _ in range(length):
        if n > 1 and rng.random() < 0.6:
            letters.append(Sigma(rng.randrange(1, n), rng.choice((1, -1))))
        else:
            letters.append(Frame(rng.randrange(1, n + 1), rng.randint(-max_frame, max_frame)))
    return FramedBraidWord(n, tuple(letters))


def markov_check(w: FramedBraidWord, params: InvariantParams, trials: int = 3,
                 seed: int = 0, tol: float = 1e-8) -> SuiteReport:
    """Conjugation by random framed braids and stabilization by sigma_n^{+-1}."""
    rng = random.Random(seed)
    rep = SuiteReport(f"Markov moves for {w}")
    base = gamma(w, params)
    for t in range(trials):
        beta = random_framed_word(w.n, rng.randint(1, 4), rng)
        lhs, rhs = gamma(w * beta, params), gamma(beta * w, params)
        rep.add(f"conjugation #{t}", _close(lhs, rhs, tol), f"|diff| = {abs(lhs - rhs):.2e}")
    up = w.with_strands(w.n + 1)
    for sign in (1, -1):
        stab = FramedBraidWord(w.n + 1, up.letters + (Sigma(w.n, sign),))
        val = gamma(stab, params)
        rep.add(f"stabilization sign {sign:+d}", _close(base, val, tol), f"|diff| = {abs(base - val):.2e}")
    return rep


def skein_links(beta: FramedBraidWord, i: int, d: int) -> dict[str, list[FramedBraidWord]]:
    """The braids whose closures enter the skein relation at crossing site i.

    "plus"/"minus" append sigma_i^{+-1}; "smoothed" appends t_i^m t_{i+1}^{-m};
    "twisted" appends t_i^m t_{i+1}^{-m} sigma_i, for m = 0..d-1.
    """
    n = beta.n
    if not 1 <= i < n:
        raise IndexError(f"crossing site {i} invalid on {n} strands")

    def ext(*extra) -> FramedBraidWord:
        return FramedBraidWord(n, beta.letters + tuple(extra))

    return {
        "plus": [ext(Sigma(i, 1))],
        "minus": [ext(Sigma(i, -1))],
        "smoothed": [ext(Frame(i, m), Frame(i + 1, -m)) for m in range(d)],
        "twisted": [ext(Frame(i, m), Frame(i + 1, -m), Sigma(i, 1)) for m in range(d)],
    }


def skein_residual(beta: FramedBraidWord, i: int, params: InvariantParams) -> float:
    """|lhs - rhs| of the framed skein relation at crossing site i.

    (1/r) G(L+) - r G(L-) = ((1/u - 1)/d) sum_m G(smoothed_m) - ((1/u - 1)/(d r)) sum_m G(twisted_m)
    with r = sqrt(w); it is the inverse formula for g_i read through the trace.
    """
    d = params.d
    r = params.sqrt_omega
    c = 1 / params.u - 1
    links = skein_links(beta, i, d)
    lhs = gamma(links["plus"][0], params) / r - r * gamma(links["minus"][0], params)
    smoothed = sum(gamma(w, params) for w in links["smoothed"])
    twisted = sum(gamma(w, params) for w in links["twisted"])
    rhs = c / d * smoothed - c / (d * r) * twisted
    return abs(lhs - rhs)


def homflypt_crosscheck(w: FramedBraidWord, params: InvariantParams, tol: float = 1e-8) -> SuiteReport:
    """Compare Gamma_1 with the skein-recursion oracle on a zero-framed braid."""
    if params.d != 1:
        raise ParamDomainError("the cross-check runs at d = 1")
    sw = split_form(w)
    if any(sw.framings):
        raise ParamDomainError("the cross-check needs zero framings")
    rep = SuiteReport(f"d = 1 cross-check for {w}")
    ours = gamma(sw, params)
    oracle = homflypt_value(sw.braid_word, sw.n, params.u, params.z, params.sqrt_omega)
    rep.add("gamma matches skein oracle", _close(ours, oracle, tol), f"{ours:.10g} vs {oracle:.10g}")
    return rep


def framing_sensitivity(params: InvariantParams, k: int, l: int) -> tuple[complex, complex]:
    """Gamma of the two-component unlink with framings (k, l) and with (k + l, 0)."""
    split = FramedBraidWord(2, (Frame(1, k), Frame(2, l)))
    merged = FramedBraidWord(2, (Frame(1, k + l),))
    return gamma(split, params), gamma(merged, params)


def invariant_suite(d: int, u: complex = 2, z: complex = 0.5, braids: int = 10,
                    seed: int = 0, tol: float = 1e-8) -> SuiteReport:
    """Closed forms against the engine for every subset solution, both branches, plus Markov moves."""
    rng = random.Random(seed)
    rep = SuiteReport(f"Gamma_{d} values and Markov moves")
    links = [Unknot(k) for k in range(d)] + [Hopf(k, l) for k in range(d) for l in range(d)]
    links += [TrefoilR(k) for k in range(d)] + [TrefoilL(k) for k in range(d)]
    for sol in solve_all(d):
        for branch in BRANCHES:
            params = InvariantParams(d, sol, u, z, branch)
            worst = max(abs(gamma(L.braid(), params) - closed_form(L, params)) / (1 + abs(closed_form(L, params)))
                        for L in links)
            rep.add(f"closed forms S={list(sol.support)} {branch}", worst < tol, f"max rel err {worst:.1e}")
    for t in range(braids):
        n = rng.randint(1, 3)
        w = random_framed_word(n, rng.randint(1, 6), rng)
        sol = rng.choice(solve_all(d))
        sub = markov_check(w, InvariantParams(d, sol, u, z), trials=2, seed=rng.randrange(1 << 30), tol=tol)
        rep.add(f"Markov moves braid #{t}", sub.ok, str(w))
    return rep


def skein_suite(d: int, u: complex = 2, z: complex = 0.5, instances: int = 10,
                seed: int = 0, tol: float = 1e-8) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport(f"Gamma_{d} skein relation")
    sols = solve_all(d)
    for t in range(instances):
        n = rng.randint(2, 3)
        beta = random_framed_word(n, rng.randint(0, 4), rng)
        i = rng.randrange(1, n)
        sol = rng.choice(sols)
        res = skein_residual(beta, i, InvariantParams(d, sol, u, z, rng.choice(BRANCHES)))
        rep.add(f"instance #{t}", res < tol, f"beta = {str(beta) or '1'}, i = {i}, residual {res:.1e}")
    return rep
