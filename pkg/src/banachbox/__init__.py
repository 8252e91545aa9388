"""Exact Banach matchbox distributions and a terminating 2F1 identity checker."""

from banachbox.combinatorics import binomial, factorial, pochhammer
from banachbox.hypergeometric import (
    IllDefinedParameters,
    eval_terminating_2f1,
    f21_term,
)
from banachbox.identity import (
    CorollaryReport,
    IdentityReport,
    corollary_check,
    identity_lhs,
    identity_rhs,
    sum_via_hypergeometric,
    verify_identity,
)
from banachbox.matchbox import (
    MatchboxParams,
    NormalizationReport,
    Pmf,
    moment,
    normalization,
    pmf_classical,
    pmf_generalized,
    s1_direct,
    s1_recurrence,
    s2_direct,
    s2_recurrence,
)
from banachbox.montecarlo import SimConfig, SimReport, run_simulation, simulate_once

__all__ = [
    "CorollaryReport",
    "IdentityReport",
    "IllDefinedParameters",
    "MatchboxParams",
    "NormalizationReport",
    "Pmf",
    "SimConfig",
    "SimReport",
    "binomial",
    "corollary_check",
    "eval_terminating_2f1",
    "f21_term",
    "factorial",
    "identity_lhs",
    "identity_rhs",
    "moment",
    "normalization",
    "pmf_classical",
    "pmf_generalized",
    "pochhammer",
    "run_simulation",
    "s1_direct",
    "s1_recurrence",
    "s2_direct",
    "s2_recurrence",
    "simulate_once",
    "sum_via_hypergeometric",
    "verify_identity",
]
