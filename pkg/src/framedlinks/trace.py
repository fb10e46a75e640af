"""The Markov trace tr_d on Y_{d,n}(u), computed by stripping the top strand.

For a basis word w_{n-1} f_n the top factor f_n is either t_n^k, giving
x_k tr(w_{n-1}), or g_{n-1} ... g_i t_i^k, giving z tr(w_{n-1} g_{n-2} ... g_i t_i^k)
with the remnant multiplied back into Y_{d,n-1}(u) through the normal-form engine.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .errors import BoundExceeded
from .poly import Poly
from .report import SuiteReport
from .yokonuma import (
    AlgebraElement,
    FrameLevel,
    Key,
    basis_size,
    e_idempotent,
    e_pair,
    e_shift,
    key_to_levels,
    levels_to_key,
    random_element,
)


def x_var(k: int, d: int) -> Poly:
    return Poly.x(k, d)


def E_poly(d: int, m: int) -> Poly:
    """E_d^{(m)} = (1/d) sum_s x_{m+s} x_{-s}, indices mod d, x_0 = 1."""
    if not 0 <= m < d:
        raise IndexError(f"E_d^({m}) needs 0 <= m < {d}")
    total = Poly()
    for s in range(d):
        total = total + x_var(m + s, d) * x_var(-s, d)
    return total.scale(Fraction(1, d))


def _basis_trace(d: int, key: Key, memo: dict | None) -> Poly:
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    a, _ = key
    n = len(a)
    levels = key_to_levels(key)
    top = levels[-1]
    if n == 1:
        val = x_var(top.m, d)
    else:
        lower = levels_to_key(levels[:-1])
        if isinstance(top, FrameLevel):
            val = x_var(top.m, d) * _basis_trace(d, lower, memo)
        else:
            rest = AlgebraElement(d, n - 1, {lower: Poly.const(1)})
            for j in range(n - 2, top.i - 1, -1):
                rest = rest.mul_g(j)
            rest = rest.mul_t(top.i, top.m)
            val = Poly.z() * _trace_terms(rest, memo)
    if memo is not None:
        memo[key] = val
    return val


def _trace_terms(a: AlgebraElement, memo: dict | None) -> Poly:
    total = Poly()
    for key, c in a.items():
        total = total + c * _basis_trace(a.d, key, memo)
    return total


def trace(a: AlgebraElement, memo: dict | None = None) -> Poly:
    """tr_d(a) as a polynomial in u, z and x_1..x_{d-1}.

    ``memo`` is an optional dict caching per-basis-word traces; pass the same
    dict across calls with the same d to share work.
    """
    return _trace_terms(a, memo)


# verification

def trace_properties_suite(d: int, n: int, sample: int = 30, seed: int = 0,
                           bound: int = 50_000) -> SuiteReport:
    """Check the trace rules and the factorization identities as exact polynomial identities."""
    if basis_size(d, n + 1) > bound:
        raise BoundExceeded(f"Y_{{{d},{n + 1}}} has more than {bound} basis words")
    rng = random.Random(seed)
    memo: dict = {}
    tr = lambda el: trace(el, memo)  # noqa: E731
    rep = SuiteReport(f"trace rules tr_{d} on Y_{{{d},{n}}}(u)")

    rep.add("tr(1) = 1", tr(AlgebraElement.unit(d, n)) == 1)
    for i in range(1, n):
        rep.add(f"tr(e{i}) = E_d", tr(e_idempotent(d, n, i)) == E_poly(d, 0))
        for m in range(d):
            rep.add(f"tr(e{i}^({m})) = E_d^({m})", tr(e_shift(d, n, i, m)) == E_poly(d, m))

    pairs = [(random_element(d, n, rng), random_element(d, n, rng)) for _ in range(sample)]
    lin = all(tr(a + b.scale(Poly.u(1) - 3)) == tr(a) + tr(b) * (Poly.u(1) - 3) for a, b in pairs)
    rep.add("linearity", lin)
    rep.add("tr(ab) = tr(ba)", all(tr(a * b) == tr(b * a) for a, b in pairs))

    up = n + 1
    g_top = AlgebraElement.g(d, up, n)
    e_top = e_idempotent(d, up, n)
    markov = framing = engn = True
    for a, _ in pairs:
        big = a.with_strands(up)
        base = tr(a)
        markov &= tr(big * g_top) == Poly.z() * base
        engn &= tr(big * e_top * g_top) == Poly.z() * base
        for m in range(d):
            framing &= tr(big.mul_t(up, m)) == x_var(m, d) * base
    rep.add("tr(a g_n) = z tr(a)", markov)
    rep.add("tr(a t_{n+1}^m) = x_m tr(a)", framing)
    rep.add("tr(a e_n g_n) = z tr(a)", engn)

    # factorization for alpha = w t_n^k, w in Y_{d,n-1}:  x_k tr(alpha e_n^(m)) = E^(m+k) tr(alpha)
    ok = True
    for _ in range(max(1, sample // 3)):
        w = random_element(d, n - 1, rng) if n > 1 else AlgebraElement.unit(d, 1)
        for k in range(d):
            alpha = w.with_strands(n).mul_t(n, k)
            big = alpha.with_strands(up)
            for m in range(d):
                lhs = x_var(k, d) * tr(big * e_shift(d, up, n, m))
                ok &= lhs == E_poly(d, (m + k) % d) * tr(alpha)
    rep.add("x_k tr(w t_n^k e_n^(m)) = E^(m+k) tr(w t_n^k)", ok)

    # top tail words: tr(w g_{n-1}..g_i t_i^k e_n) = z tr(g_{n-2}..g_i t_i^k w e_{n-1})
    if n >= 2:
        ok = True
        for _ in range(max(1, sample // 3)):
            w = random_element(d, n - 1, rng)
            i = rng.randrange(1, n)
            k = rng.randrange(d)
            alpha = w.with_strands(n)
            for j in range(n - 1, i - 1, -1):
                alpha = alpha.mul_g(j)
            alpha = alpha.mul_t(i, k)
            head = AlgebraElement.unit(d, n - 1)
            for j in range(n - 2, i - 1, -1):
                head = head.mul_g(j)
            alpha_p = head.mul_t(i, k) * w
            lhs = tr(alpha.with_strands(up) * e_idempotent(d, up, n))
            ok &= lhs == Poly.z() * tr(alpha_p.with_strands(n) * e_idempotent(d, n, n - 1))
        rep.add("tr(w g..g_i t_i^k e_n) = z tr(alpha' e_(n-1))", ok)

    # index shifts: (1/d) sum_s t_i^{k+s} t_{i+1}^{l-s} = e^{(k+l)}, same for the x's
    if n >= 2:
        shift_alg = shift_poly = True
        for k in range(-d, 2 * d):
            for l in range(-d, 2 * d):
                el = AlgebraElement.zero(d, n)
                pol = Poly()
                for s in range(d):
                    el = el + AlgebraElement.t(d, n, 1, k + s).mul_t(2, l - s)
                    pol = pol + x_var(k + s, d) * x_var(l - s, d)
                shift_alg &= el.scale(Fraction(1, d)) == e_shift(d, n, 1, (k + l) % d)
                shift_poly &= pol.scale(Fraction(1, d)) == E_poly(d, (k + l) % d)
        rep.add("shifted sums of t's give e^(k+l)", shift_alg)
        rep.add("shifted sums of x's give E^(k+l)", shift_poly)

    # e_{i,k} commute with everything in the trace: tr(a e_{i,k}) = tr(e_{i,k} a)
    if n >= 3:
        ok = all(tr(a * e_pair(d, n, 1, n)) == tr(e_pair(d, n, 1, n) * a) for a, _ in pairs[:5])
        rep.add("tr(a e_(1,n)) = tr(e_(1,n) a)", ok)

    return rep
