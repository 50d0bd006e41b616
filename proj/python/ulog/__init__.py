"""Exact binomial-type series, their operator expansions and identity checks."""

import json
from fractions import Fraction

from . import _ulog

suite_names = _ulog.suite_names
canonical_family = _ulog.canonical_family


def _fractions(values):
    return [Fraction(v) for v in values]


def run_suite(name, order=None, depth=None, seed=20241):
    """Report of one verification suite as a dict (statuses pass/fail/info)."""
    return json.loads(_ulog.run_suite_json(name, order, depth, seed))


def family_series(f, order):
    """f, its inverse phi, tau_f = f/f' and omega as Fraction lists up to x^order."""
    return {k: _fractions(v) for k, v in _ulog.family_series(f, order).items()}


def p_sequence(f, n):
    """Coefficient lists (constant term first) of p_0..p_n."""
    return [_fractions(row) for row in _ulog.p_sequence(f, n)]


def q_coefficients(f, n):
    """q_0(s)..q_n(s) as {power of s: Fraction}."""
    out = []
    for poly in json.loads(_ulog.q_coefficients_json(f, n)):
        out.append({term.get("s", 0): Fraction(term["c"]) for term in poly})
    return out
