"""Triangular numbers T_xi = k * T_t: solutions, residues, rules and sieve."""

import json

from . import _core
from ._core import (
    BrokenPairing,
    DivergenceError,
    Error,
    SolverError,
    candidate_residues,
    combination_m,
    naive_search,
    observed_residues,
    sequence,
    sieve_search,
    verify_solution,
)

__all__ = [
    "BrokenPairing",
    "DivergenceError",
    "Error",
    "SolverError",
    "bench",
    "candidate_residues",
    "classify",
    "combination_m",
    "naive_search",
    "observed_residues",
    "sequence",
    "sieve_search",
    "spec",
    "verify_solution",
]

_BIG = {"t", "xi", "T_t", "T_xi", "kappa", "gamma", "two_kappa_plus_3", "coeff_linear", "coeff_tri", "const_tri"}


def _ints(obj):
    if isinstance(obj, dict):
        return {k: int(v) if k in _BIG and isinstance(v, str) else _ints(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_ints(v) for v in obj]
    return obj


def spec(k):
    """Rank, recurrence constants and seed solutions for k."""
    return _ints(json.loads(_core.spec_json(k)))


def classify(k, n_max=12):
    """Rule and expression findings for k against its observed residues."""
    return json.loads(_core.classify_json(k, n_max))


def bench(k, limit, reps=3):
    """Naive versus sieve timing and candidate counts."""
    return json.loads(_core.bench_json(k, limit, reps))
