"""Discrete fractional sums and differences (Riemann and binomial forms)."""

import json

from ._core import (  # noqa: F401
    DiscfracError,
    GridFunction,
    apply,
    check_ids,
    delta,
    falling_factorial,
    gamma_ratio,
    gl_weights,
    nabla,
    q_reflect,
    riemann_diff_alt,
    rising_factorial,
    run_check_jsonl,
)


def run_check(check_id, seed=42):
    """Run one registered identity check and return its report as a dict."""
    return json.loads(run_check_jsonl(check_id, seed))


__all__ = [
    "DiscfracError",
    "GridFunction",
    "apply",
    "check_ids",
    "delta",
    "falling_factorial",
    "gamma_ratio",
    "gl_weights",
    "nabla",
    "q_reflect",
    "riemann_diff_alt",
    "rising_factorial",
    "run_check",
]
