"""Acceptance criteria 1-9, each at its stated tolerance.

Run ``pytest tests/test_acceptance.py -v`` (a summary with one PASS/FAIL line
per criterion is printed at the end) or ``python tests/test_acceptance.py``.
"""
import sys

import pytest

from banachlab import verify
from banachlab.core import DEFAULT_CONFIG

RESULTS = {}

TITLES = {
    1: "closed-form witness norm, n=1..50, width <= 1e-6, < 10 s",
    2: "Blaschke isometry on 100 random pairs (<= 1e-8) and unimodularity (<= 1e-10)",
    3: "non-TDZ certificate, 10 products x 100 unit-norm trials, min ratio >= 1 - 1e-8",
    4: "tent witness round trip on 50 random piecewise-linear functions",
    5: "bump rate 1/(4n) for n <= 1e4 and L/n on a Lipschitz corpus",
    6: "shifted Bernstein route for |x - 1/2|",
    7: "l-infinity table against a 1e6-coordinate scan",
    8: "phi = [0,0] iff TDZ Proved, and 1-Lipschitz on 200 random pairs",
    9: "dichotomy boundary for (z - z0)/2",
}


def line(k, result):
    return f"criterion {k} [{TITLES[k]}]: {'PASS' if result.passed else 'FAIL'} -- {result.detail}"


@pytest.mark.parametrize("k", sorted(verify.CRITERIA))
def test_criterion(k):
    result = verify.run_criterion(k, DEFAULT_CONFIG, seed=0)
    RESULTS[k] = result
    print(line(k, result))
    assert result.passed, result.detail


def test_criterion_1_runtime_budget():
    r = verify.closed_form_match(DEFAULT_CONFIG)
    assert r.measured["seconds"] < 10.0 and r.measured["max_width"] <= 1e-6


@pytest.mark.parametrize("seed", [1, 2])
def test_randomized_criteria_other_seeds(seed):
    for check in (verify.isometry, verify.tent_round_trip, verify.phi_lipschitz):
        assert check(DEFAULT_CONFIG, seed).passed


if __name__ == "__main__":
    ok = True
    for k in sorted(verify.CRITERIA):
        r = verify.run_criterion(k, DEFAULT_CONFIG, seed=0)
        ok &= r.passed
        print(line(k, r))
    sys.exit(0 if ok else 1)
