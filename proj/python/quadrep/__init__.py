"""Four-term quadratic-form representations.

Exact thresholds and d-selection windows, constrained four-square solvers,
constructive witnesses, bitset sumset sieves and a claim registry with
executable checks.
"""

from ._quadrep import (
    cauchy_solve,
    cauchy_solve_z,
    check_conjecture,
    count_representations,
    eval_form,
    exceptions,
    in_E,
    interval,
    interval_contains,
    ks_solve,
    lem_ms_solve,
    list_claims,
    min_threshold_observed,
    polygonal_params,
    sieve_representable,
    threshold,
    verify_claim,
    witness,
)

__version__ = "0.1.0"

__all__ = [
    "cauchy_solve",
    "cauchy_solve_z",
    "check_conjecture",
    "count_representations",
    "eval_form",
    "exceptions",
    "in_E",
    "interval",
    "interval_contains",
    "ks_solve",
    "lem_ms_solve",
    "list_claims",
    "min_threshold_observed",
    "polygonal_params",
    "sieve_representable",
    "threshold",
    "verify_claim",
    "witness",
]
