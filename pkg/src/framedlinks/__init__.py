"""Exact computations in Yokonuma-Hecke algebras: normal forms, the Markov
trace, E-system solutions, the framed-link invariant Gamma_d and finite-depth
p-adic prefixes."""

from .braids import FramedBraidWord, SplitFramedBraid, braid_mul, exponent, mod_reduce, parse_braid, split_form
from .esystem import (
    CyclicFn,
    ESolution,
    convolve,
    cyclic_solution,
    delta_solution,
    dft,
    e_residual,
    lift_solution,
    solve_all,
)
from .invariants import InvariantParams, closed_form, gamma, homflypt_crosscheck, markov_check, skein_residual
from .padic import (
    PAdicAlgebraApprox,
    PAdicIntApprox,
    PolySeqApprox,
    commute_check,
    e_padic,
    expand,
    gamma_stabilization,
    phi,
    tau_prefix,
    truncate,
)
from .poly import Monomial, Poly
from .trace import E_poly, trace, trace_properties_suite
from .yokonuma import (
    AlgebraElement,
    BasisWord,
    alg_mul,
    e_idempotent,
    e_pair,
    e_shift,
    embed_braid,
    enumerate_basis,
    g_power,
    relation_suite,
)

__all__ = [
    "alg_mul",
    "AlgebraElement",
    "BasisWord",
    "braid_mul",
    "closed_form",
    "commute_check",
    "convolve",
    "cyclic_solution",
    "CyclicFn",
    "delta_solution",
    "dft",
    "e_idempotent",
    "e_padic",
    "e_pair",
    "E_poly",
    "e_residual",
    "e_shift",
    "embed_braid",
    "enumerate_basis",
    "ESolution",
    "expand",
    "exponent",
    "FramedBraidWord",
    "g_power",
    "gamma",
    "gamma_stabilization",
    "homflypt_crosscheck",
    "InvariantParams",
    "lift_solution",
    "markov_check",
    "mod_reduce",
    "Monomial",
    "PAdicAlgebraApprox",
    "PAdicIntApprox",
    "parse_braid",
    "phi",
    "Poly",
    "PolySeqApprox",
    "relation_suite",
    "skein_residual",
    "solve_all",
    "split_form",
    "SplitFramedBraid",
    "tau_prefix",
    "trace",
    "trace_properties_suite",
    "truncate",
]

__version__ = "0.1.0"
