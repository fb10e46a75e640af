"""End-to-end acceptance criteria; each test prints one PASS/FAIL line."""
import random
import time
from fractions import Fraction

import pytest

from framedlinks.braids import FramedBraidWord, Frame, Sigma
from framedlinks.esystem import (
    CyclicFn,
    delta_solution,
    delta_values,
    e_residual,
    lift_solution,
    max_deviation,
    solve_all,
)
from framedlinks.invariants import (
    BRANCHES,
    Hopf,
    InvariantParams,
    TrefoilL,
    TrefoilR,
    Unknot,
    closed_form,
    framing_sensitivity,
    gamma,
    homflypt_crosscheck,
    markov_check,
    random_framed_word,
    skein_residual,
)
from framedlinks.padic import commute_check, e_padic, gamma_stabilization, phi
from framedlinks.poly import Poly
from framedlinks.trace import E_poly, trace, trace_properties_suite
from framedlinks.yokonuma import (
    AlgebraElement,
    basis_size,
    e_idempotent,
    enumerate_basis,
    g_power,
    random_element,
    relation_suite,
)


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail

    return emit


u, z = Poly.u(), Poly.z()


def word(d, n, *ops):
    """Right-multiply the unit by ('g', i) and ('t', j, m) factors."""
    el = AlgebraElement.unit(d, n)
    for op in ops:
        el = el.mul_g(op[1]) if op[0] == "g" else el.mul_t(op[1], op[2])
    return el


def times_e_top(alpha):
    n = alpha.n
    return alpha.with_strands(n + 1) * e_idempotent(alpha.d, n + 1, n)


def test_criterion_1_symbolic_traces(verdict):
    start = time.perf_counter()
    failures = []
    for d in (1, 2, 3):
        X = lambda k: Poly.x(k, d)  # noqa: E731
        E = lambda m: E_poly(d, m % d)  # noqa: E731
        R = range(d)
        for k in R:
            if trace(word(d, 1, ("t", 1, k))) != X(k):
                failures.append(f"d={d} tr(t1^{k})")
            for k1 in R:
                if trace(word(d, 2, ("t", 1, k1), ("g", 1), ("t", 1, k))) != z * X(k1 + k):
                    failures.append(f"d={d} tr(t1^{k1} g1 t1^{k})")
                for k2 in R:
                    a2 = word(d, 3, ("t", 1, k1), ("t", 2, k2), ("g", 2), ("t", 2, k))
                    a3 = word(d, 3, ("t", 1, k1), ("t", 2, k2), ("g", 2), ("g", 1), ("t", 1, k))
                    for name, alpha, K in (("t1 t2 g2 t2", a2, k2 + k), ("t1 t2 g2 g1 t1", a3, k1 + k2 + k)):
                        if X(K) * trace(times_e_top(alpha)) != E(K) * trace(alpha):
                            failures.append(f"d={d} {name} k=({k1},{k2},{k})")
                a5 = word(d, 3, ("g", 1), ("t", 1, k1), ("g", 2), ("t", 2, k))
                if X(k1 + k) * trace(times_e_top(a5)) != E(k1 + k) * trace(a5):
                    failures.append(f"d={d} g1 t1 g2 t2 k=({k1},{k})")
                a6 = word(d, 3, ("g", 1), ("t", 1, k1), ("g", 2), ("g", 1), ("t", 1, k))
                if trace(a6) != z * X(k1) * X(k) + z * (u - 1) * E(k1 + k) - z * z * (u - 1) * X(k1 + k):
                    failures.append(f"d={d} tr(g1 t1 g2 g1 t1) k=({k1},{k})")
                shifted = sum((X(-s) * E(k + k1 + s) for s in R), Poly()).scale(Fraction(1, d))
                rhs = z * X(k1) * E(k) + z * (u - 1) * shifted - z * z * (u - 1) * E(k1 + k)
                if trace(times_e_top(a6)) != rhs:
                    failures.append(f"d={d} tr(g1 t1 g2 g1 t1 e) k=({k1},{k})")
        Ed = E(0)
        c = Poly.u(-3) - Poly.u(-2) + Poly.u(-1)
        if trace(g_power(d, 2, 1, 2)) != 1 - (u - 1) * z + (u - 1) * Ed:
            failures.append(f"d={d} tr(g^2)")
        if trace(g_power(d, 2, 1, 3)) != (u * u - u + 1) * z - (u * u - u) * Ed:
            failures.append(f"d={d} tr(g^3)")
        if trace(g_power(d, 2, 1, -3)) != c * z - (c - 1) * Ed:
            failures.append(f"d={d} tr(g^-3)")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10
    verdict(1, ok, f"symbolic traces exact for d=1,2,3 in {elapsed:.2f}s; failures: {failures[:5]}")


def test_criterion_2_esystem_completeness(verdict):
    start = time.perf_counter()
    problems = []
    for d in range(2, 7):
        sols = solve_all(d)
        if len(sols) != 2 ** d - 1:
            problems.append(f"d={d} count {len(sols)}")
        worst = max(s.residual() for s in sols)
        if worst >= 1e-10:
            problems.append(f"d={d} residual {worst:.1e}")
        ds = delta_solution(d)
        if max_deviation(ds.x_vector(), delta_values(d)) >= 1e-10:
            problems.append(f"d={d} delta values")
        E_at_delta = E_poly(d, 0).eval(2, 0.5, ds.x_vector())
        if abs(E_at_delta - 1 / (d - 1)) >= 1e-10:
            problems.append(f"d={d} E(delta) = {E_at_delta}")
    d3 = [s.x_vector() for s in solve_all(3)]
    if not any(max_deviation(v, (1, -0.5, -0.5)) < 1e-12 for v in d3):
        problems.append("d=3 lacks (1,-1/2,-1/2)")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 5
    verdict(2, ok, f"2^d-1 solutions for d=2..6, delta and d=3 checks in {elapsed:.3f}s; {problems}")


def test_criterion_3_multiplicativity(verdict):
    rng = random.Random(2024)
    memo: dict[int, dict] = {}
    solutions = {d: solve_all(d) for d in range(1, 5)}
    worst = 0.0
    checked = 0
    for _ in range(500):
        d, n = rng.randint(1, 4), rng.randint(1, 4)
        alpha = random_element(d, n, rng, terms=rng.randint(1, 3))
        cache = memo.setdefault(d, {})
        t_alpha = trace(alpha, cache)
        t_prod = trace(times_e_top(alpha), cache)
        t_e = E_poly(d, 0)
        for sol in solutions[d]:
            x = sol.x_vector()
            for uv, zv in ((2, 0.5), (complex(0.3, 1.1), complex(-0.7, 0.4))):
                lhs = t_prod.eval(uv, zv, x)
                rhs = t_alpha.eval(uv, zv, x) * t_e.eval(uv, zv, x)
                worst = max(worst, abs(lhs - rhs) / (1 + abs(rhs)))
                checked += 1
    # negative control: a non-solution vector breaks the factorization for some alpha
    bad = CyclicFn(3, (1, 0.7, 0.49))
    assert e_residual(bad) > 0.1
    control_gap = 0.0
    for _ in range(50):
        alpha = random_element(3, 2, rng)
        lhs = trace(times_e_top(alpha), memo.setdefault(3, {})).eval(2, 0.5, bad.values)
        rhs = trace(alpha, memo[3]).eval(2, 0.5, bad.values) * E_poly(3, 0).eval(2, 0.5, bad.values)
        control_gap = max(control_gap, abs(lhs - rhs))
    ok = worst < 1e-8 and control_gap > 1e-3
    verdict(3, ok, f"{checked} evaluations, worst rel err {worst:.1e}; non-solution gap {control_gap:.3f}")


def test_criterion_4_closed_forms(verdict):
    rng = random.Random(4)
    worst = 0.0
    count = 0
    for d in (2, 3):
        links = [Unknot(k) for k in range(-1, d + 1)]
        links += [Hopf(k, l) for k in range(d) for l in range(-1, d + 1)]
        links += [TrefoilR(k) for k in range(-1, d + 1)] + [TrefoilL(k) for k in range(-1, d + 1)]
        for sol in solve_all(d):
            for _ in range(5):
                uv = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                zv = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                for branch in BRANCHES:
                    params = InvariantParams(d, sol, uv, zv, branch)
                    for L in links:
                        a, b = gamma(L.braid(), params), closed_form(L, params)
                        worst = max(worst, abs(a - b) / (1 + abs(b)))
                        count += 1
    verdict(4, worst < 1e-8, f"{count} comparisons, worst rel err {worst:.1e}")


def test_criterion_5_markov_and_skein(verdict):
    rng = random.Random(5)
    markov_fail = 0
    for t in range(100):
        d = rng.randint(1, 3)
        n = rng.randint(1, 4)
        w = random_framed_word(n, rng.randint(1, 10), rng)
        params = InvariantParams(d, rng.choice(solve_all(d)), 2, 0.5, rng.choice(BRANCHES))
        if not markov_check(w, params, trials=1, seed=t).ok:
            markov_fail += 1
    worst = 0.0
    for _ in range(50):
        d = rng.randint(1, 3)
        n = rng.randint(2, 3)
        beta = random_framed_word(n, rng.randint(0, 5), rng)
        params = InvariantParams(d, rng.choice(solve_all(d)),
                                 complex(rng.uniform(1.2, 3), rng.uniform(-1, 1)),
                                 complex(rng.uniform(0.2, 1), rng.uniform(-1, 1)), rng.choice(BRANCHES))
        worst = max(worst, skein_residual(beta, rng.randrange(1, n), params))
    ok = markov_fail == 0 and worst < 1e-8
    verdict(5, ok, f"Markov failures {markov_fail}/100; worst skein residual {worst:.1e} over 50")


def test_criterion_6_framing_sensitivity(verdict):
    params = InvariantParams(3, delta_solution(3))
    split, merged = framing_sensitivity(params, 1, 1)
    gap = abs(split - merged)
    verdict(6, gap > 1e-3, f"Gamma(unlink (1,1)) = {split.real:.4f}, Gamma(unlink (2,0)) = {merged.real:.4f}")


def test_criterion_7_padic(verdict):
    problems = []
    for p in (2, 3):
        seq = e_padic(p, 3, 2, 1)
        for r in range(1, 4):
            for s in range(1, r + 1):
                if phi(r, s, seq.entry(r), p) != seq.entry(s):
                    problems.append(f"phi p={p} r={r} s={s}")
        rep = commute_check(p, 3, 2, sample=200, seed=p, full_limit=4)
        if not rep.ok:
            problems.append(f"commute p={p}")
    for p in (2, 3):
        for sol in solve_all(p):
            for r in (2, 3):
                if lift_solution(sol, p ** r).residual() >= 1e-10:
                    problems.append(f"lift p={p} S={sol.support} r={r}")
    rng = random.Random(7)
    for t in range(20):
        p = (2, 3)[t % 2]
        depth = 4 if p == 2 else 3
        # split-form framings in [-8, 8], so p^depth > |k| for both primes
        n = rng.randint(1, 3)
        frames = tuple(Frame(j, rng.randint(-8, 8)) for j in range(1, n + 1))
        w = FramedBraidWord(n, frames) * random_framed_word(n, rng.randint(0, 5), rng, max_frame=0)
        rep = gamma_stabilization(w, p, depth, rng.choice(solve_all(p)), branch=rng.choice(BRANCHES))
        if not rep.ok:
            problems.append(f"stabilization {w}")
    verdict(7, not problems, f"phi/commute/lift/stabilization checks; problems: {problems[:5]}")


def test_criterion_8_homflypt(verdict):
    sol = solve_all(1)[0]
    results = []
    for uv, zv in ((2, 0.5), (complex(0.4, 1.3), complex(-0.6, 0.2))):
        params = InvariantParams(1, sol, uv, zv)
        for w in (FramedBraidWord(1), FramedBraidWord(2, (Sigma(1),) * 2),
                  FramedBraidWord(2, (Sigma(1),) * 3), FramedBraidWord(2, (Sigma(1, -1),) * 3)):
            results.append(homflypt_crosscheck(w, params).ok)
    verdict(8, all(results), f"{sum(results)}/{len(results)} oracle matches (unknot, Hopf, both trefoils)")


def test_criterion_9_structural_suites(verdict):
    start = time.perf_counter()
    problems = []
    for d, n in ((1, 3), (2, 3), (3, 2), (2, 4)):
        if not relation_suite(d, n).ok:
            problems.append(f"relations {d},{n}")
        if not trace_properties_suite(d, n).ok:
            problems.append(f"trace {d},{n}")
    for d in (1, 2, 3):
        for n in (1, 2, 3, 4):
            if sum(1 for _ in enumerate_basis(d, n)) != basis_size(d, n):
                problems.append(f"basis {d},{n}")
    elapsed = time.perf_counter() - start
    verdict(9, not problems, f"relation and trace suites plus basis counts in {elapsed:.1f}s; {problems}")
