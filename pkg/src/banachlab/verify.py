"""Verification suites: property checks and numbered acceptance criteria.

Every check returns a :class:`CheckResult` carrying the measured slack.
Randomized checks draw from ``numpy.random.default_rng(seed)`` so a run is
reproducible from its seed.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import corpus, disk, interval, sequence
from .core import (
    DEFAULT_CONFIG,
    BanachLabError,
    Config,
    NormBound,
    Status,
    classify,
    norm,
    phi,
    phi_lipschitz_check,
    propagate_tdz_witness,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    criterion: Optional[int] = None
    measured: dict = field(default_factory=dict)

    def line(self) -> str:
        tag = f"[criterion {self.criterion}] " if self.criterion else ""
        return f"{tag}{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.detail})"


Check = Callable[[Config, int], CheckResult]


# criterion 1 and the linear-factor invariants


def closed_form_match(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    t0 = time.perf_counter()
    worst_width, misses = 0.0, []
    for n in range(1, 51):
        _, _, prod = disk.linear_factor_witness(1, n, config)
        exact = disk.closed_form_witness_norm(n)
        worst_width = max(worst_width, prod.width)
        if not prod.contains(exact):
            misses.append(n)
    elapsed = time.perf_counter() - t0
    ok = not misses and worst_width <= 1e-6 and elapsed < 10.0
    detail = f"n=1..50, max width {worst_width:.2e}, {elapsed:.2f}s" + (f", missed n={misses}" if misses else "")
    return CheckResult("formula-match", ok, detail, 1, {"max_width": worst_width, "seconds": elapsed})


def closed_form_monotone(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    vals = [disk.closed_form_witness_norm(n) for n in range(1, 10_001)]
    dec = all(b < a for a, b in zip(vals, vals[1:]))
    # value ~ (e n)^(-1/2): first n below eps is computable
    eps = 1e-2
    n_eps = next(n for n, v in enumerate(vals, start=1) if v < eps)
    ok = dec and vals[-1] < 0.01
    return CheckResult("monotone-convergence", ok, f"strictly decreasing to {vals[-1]:.3e} at n=1e4, below {eps} from n={n_eps}")


def dichotomy(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    on = [1, 1j, cmath.exp(1j * math.pi / 7)]
    off = [0, 0.5, 0.99, 1.01, 2]
    bad = []
    worst = 0.0
    for z0 in on:
        if disk.linear_factor_classify(z0, config).topological_divisor.status is not Status.PROVED:
            bad.append(f"{z0}: not Proved")
    for z0 in off:
        cls = disk.linear_factor_classify(z0, config)
        if cls.topological_divisor.status is not Status.REFUTED:
            bad.append(f"{z0}: not Refuted")
            continue
        target = abs(1 - abs(z0)) / 2
        m = cls.topological_divisor.certificate["circle_min"]
        rel = max(abs(m.lo - target), abs(m.hi - target)) / target
        worst = max(worst, rel)
        if rel > 1e-4:
            bad.append(f"{z0}: min off by {rel:.2e}")
    detail = f"max relative error of certified min vs |1-r|/2: {worst:.2e}" + (f"; {bad}" if bad else "")
    return CheckResult("dichotomy", not bad, detail, 9, {"max_relative_error": worst})


# criteria 2 and 3


def unimodularity(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = max(disk.unimodularity_deviation(corpus.random_blaschke(rng), 2**16) for _ in range(100))
    return CheckResult("unimodularity", worst <= 1e-10, f"max ||B|-1| {worst:.2e} at 2^16 samples", 2, {"max_deviation": worst})


def isometry(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst, failures = 0.0, 0
    for _ in range(100):
        B = corpus.random_blaschke(rng)
        f = corpus.random_polynomial(rng)
        v = disk.blaschke_isometry_check(B, f, config)
        worst = max(worst, v.certificate["deviation"])
        failures += not v.is_proved
    ok = failures == 0 and worst <= 1e-8
    return CheckResult("isometry", ok, f"max deviation {worst:.1e} over 100 pairs", 2, {"max_deviation": worst})


def non_tdz(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = math.inf
    for _ in range(10):
        B = corpus.random_blaschke(rng)
        trials = []
        for _ in range(100):
            g = corpus.random_polynomial(rng)
            trials.append(g * disk.ComplexPolynomial([1 / norm(g, config).mid]))
        v = disk.blaschke_non_tdz_certificate(B, trials, config)
        worst = min(worst, v.certificate["min_ratio"])
    ok = worst >= 1 - 1e-8
    return CheckResult("non-tdz", ok, f"min ||Bg||/||g|| = {worst:.12f} over 10x100 trials", 3, {"min_ratio": worst})


# criteria 4 and 5


def tent_round_trip(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(50):
        N = int(rng.integers(6, 60))
        a = float(rng.uniform(-2, 0))
        b = a + float(rng.uniform(0.5, 3))
        i = int(rng.integers(1, N - 3))
        j = int(rng.integers(i + 1, N - 1))
        vals = rng.choice([-1, 1], N) * rng.uniform(0.1, 2, N) + 1j * rng.uniform(-1, 1, N) * rng.integers(0, 2)
        vals[i : j + 1] = 0
        f = interval.GridFunction(a, b, vals)
        c, d = f.nodes[i], f.nodes[j]
        g = interval.zero_divisor_witness(f)
        nodes = np.union1d(f.nodes, g.nodes)
        node_exact = bool(np.all(f(nodes) * g(nodes) == 0))
        prod = interval.product_sup_norm(f, g)
        exact_norm = norm(g, config).hi == (d - c) / 2 and norm(g, config).width == 0
        bad += not (node_exact and prod.hi == 0 and exact_norm)
    return CheckResult("tent-round-trip", bad == 0, f"{50 - bad}/50 tents exact", 4)


def bump_rate(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    worst = 0.0
    for c, ns in ((0.5, range(1, 10_001)), (0.0, range(1, 10_001, 97)), (0.3, range(1, 10_001, 89)), (1.0, range(1, 10_001, 83))):
        f = interval.GridFunction(0.0, 1.0, [-c, 0.0, 1.0 - c], [0.0, c, 1.0]) if 0 < c < 1 else interval.GridFunction(0.0, 1.0, [-c, 1 - c])
        for n in ns:
            _, _, prod = interval.tdz_bump_witness(f, c, n)
            worst = max(worst, abs(prod.hi - 1 / (4 * n)), prod.width)
    rng = np.random.default_rng(seed)
    lip_bad = 0
    for _ in range(10):
        N = int(rng.integers(5, 40))
        vals = rng.uniform(-1, 1, N)
        k = int(rng.integers(0, N))
        vals[k] = 0.0
        f = interval.GridFunction(0.0, 1.0, vals)
        L = float(np.max(np.abs(np.diff(vals)) / np.diff(f.nodes)))
        for n in sorted({int(v) for v in np.geomspace(1, 10_000, 30)}):
            _, _, prod = interval.tdz_bump_witness(f, float(f.nodes[k]), n)
            lip_bad += prod.hi > L / n
    ok = worst <= 1e-15 and lip_bad == 0
    return CheckResult("bump-rate", ok, f"max |cert - 1/(4n)| {worst:.1e}; Lipschitz bound violations {lip_bad}", 5, {"max_error": worst})


# criterion 6 and the Bernstein bound


def _abs_half() -> interval.GridFunction:
    return interval.GridFunction(0.0, 1.0, [0.5, 0.0, 0.5])


def weierstrass(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    f = _abs_half()
    degrees = (10, 20, 40, 80, 160)
    w = interval.weierstrass_tdz_route(f, 0.5, degrees, config)
    terms = w.terms(range(1, len(degrees) + 1))
    at_c = max(abs(complex(t.element(0.5))) for t in terms)
    errs = [interval.bernstein_error(f, n, config) for n in degrees]
    dec = all(e2.hi < e1.lo for e1, e2 in zip(errs, errs[1:]))
    ok = at_c <= 1e-14 and dec
    errs_s = ", ".join(f"{e.mid:.4f}" for e in errs)
    return CheckResult("weierstrass", ok, f"max |q_n(1/2)| {at_c:.1e}; errors {errs_s}", 6, {"q_at_c": at_c})


def bernstein_bound(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    fs = [_abs_half()]
    for _ in range(5):
        fs.append(interval.GridFunction(0.0, 1.0, rng.uniform(-1, 1, int(rng.integers(3, 12)))))
    worst = 0.0
    for f in fs:
        L = float(np.max(np.abs(np.diff(f.values)) / np.diff(f.nodes)))
        for n in (5, 10, 20, 40, 80):
            e = interval.bernstein_error(f, n, config)
            worst = max(worst, e.hi / (1.5 * L / math.sqrt(n)))
    return CheckResult("bernstein-bound", worst <= 1.0, f"max error / (3/2) L n^-1/2 = {worst:.3f}")


# criterion 7 and the l-infinity invariants


def linf_table(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    items = corpus.sequence_corpus()
    mismatches = []
    for name, x in items.items():
        coords = np.abs(x.coordinates(10**6))
        t = x.tail
        # beyond the scan the tail is monotone in 1/n, so its infimum is the limit |c|
        inf_gt = min(float(coords.min()), abs(t.const))
        zero_gt = bool((coords == 0).any()) or (t.const == 0 and t.scale == 0)
        cls = classify(x, config)
        got = (cls.regular.is_proved, cls.zero_divisor.is_proved, cls.topological_divisor.status, cls.singular.status)
        want = (inf_gt > 0, zero_gt, cls.singular.status, Status.REFUTED if inf_gt > 0 else Status.PROVED)
        if got != want or cls.has_unknown():
            mismatches.append(name)
    e = corpus.sequence_corpus()["zero_then_ones"]
    mem = sequence.space_membership(e)
    cls = classify(e, config)
    inclusions = (
        cls.zero_divisor.is_proved
        and cls.topological_divisor.is_proved
        and mem["in_c00"].is_refuted
        and mem["in_c0"].is_refuted
    )
    for name, x in items.items():
        mem = sequence.space_membership(x)
        c = classify(x, config)
        if mem["in_c00"].is_proved and first_zero_exists(x) and not c.zero_divisor.is_proved:
            mismatches.append(f"{name} (c00)")
        if mem["in_c0"].is_proved and not c.topological_divisor.is_proved:
            mismatches.append(f"{name} (c0)")
    ok = not mismatches and inclusions and len(items) >= 20
    detail = f"{len(items)} sequences vs 1e6-coordinate scan; (0,1,1,...) witnesses both proper inclusions: {inclusions}"
    if mismatches:
        detail += f"; mismatches {mismatches}"
    return CheckResult("linf-table", ok, detail, 7)


def first_zero_exists(x) -> bool:
    return sequence.first_zero(x) is not None


def linf_inverse(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    bad = []
    for name, x in corpus.sequence_corpus().items():
        regular = classify(x, config).regular.is_proved
        try:
            y = sequence.inverse(x)
        except BanachLabError:
            if regular and x.tail.kind != "affine":
                bad.append(name)
            continue
        prod = x.coordinates(10_000) * y.coordinates(10_000)
        t = x.tail * y.tail
        if not (np.allclose(prod, 1, rtol=0, atol=1e-12) and abs(t.const - 1) <= 1e-12 and t.scale == 0 and regular):
            bad.append(name)
    return CheckResult("linf-inverse", not bad, "x * inverse(x) = 1 on 1e4 coordinates and the tail" + (f"; bad {bad}" if bad else ""))


def linf_witness_monotone(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    bad = []
    for name, x in corpus.sequence_corpus().items():
        if x.tail.kind != "recip" or not classify(x, config).topological_divisor.is_proved:
            continue
        norms_ = [sequence.tdz_witness(x, k)[1].hi for k in range(1, 301)]
        if any(b > a for a, b in zip(norms_, norms_[1:])) or norms_[-1] > 2 * abs(x.tail.scale) / 300:
            bad.append(name)
    return CheckResult("linf-witness-monotone", not bad, "non-increasing product norms tending to 0" + (f"; bad {bad}" if bad else ""))


# criterion 8 and the cross-algebra invariants


def phi_coherence(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    bad = []
    decisive = 0
    for name, x in corpus.full_corpus().items():
        cls = classify(x, config)
        if cls.topological_divisor.status is Status.UNKNOWN:
            continue
        decisive += 1
        if phi(x, config).is_zero() != cls.topological_divisor.is_proved:
            bad.append(name)
    return CheckResult("phi-coherence", not bad, f"{decisive} decisive elements, phi=[0,0] iff TDZ Proved" + (f"; bad {bad}" if bad else ""), 8)


def _random_pairs(rng: np.random.Generator):
    for _ in range(80):
        N = int(rng.integers(2, 30))
        f = interval.GridFunction(0.0, 1.0, rng.uniform(-1, 1, N) + 1j * rng.uniform(-1, 1, N))
        h = interval.GridFunction(0.0, 1.0, rng.uniform(-0.3, 0.3, N))
        yield f, h
    for _ in range(80):
        pre = tuple(rng.uniform(-2, 2, int(rng.integers(0, 8))))
        tails = [sequence.Constant(rng.uniform(-1, 1)), sequence.ReciprocalDecay(rng.uniform(-1, 1)), sequence.Zero()]
        x = sequence.BoundedSequence(pre, tails[int(rng.integers(0, 3))])
        h = sequence.BoundedSequence(tuple(rng.uniform(-0.3, 0.3, len(pre))), sequence.Constant(rng.uniform(-0.3, 0.3)))
        yield x, h
    for _ in range(40):
        f = disk.DiskElement(corpus.random_polynomial(rng, 6))
        h = disk.DiskElement(corpus.random_polynomial(rng, 3) * disk.ComplexPolynomial([0.2]))
        yield f, h


def phi_lipschitz(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = -math.inf
    failures = 0
    count = 0
    for f, h in _random_pairs(rng):
        count += 1
        try:
            v = phi_lipschitz_check(f, h, config)
        except BanachLabError:
            failures += 1
            continue
        cert = v.certificate
        worst = max(worst, cert["difference"] - cert["norm_h"].hi)
        failures += not v.is_proved
    return CheckResult(
        "phi-lipschitz", failures == 0 and count == 200, f"{count} pairs, max |dphi| - ||h|| = {worst:.2e}, failures {failures}", 8
    )


def phi_identity(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(50):
        N = int(rng.integers(2, 40))
        f = interval.GridFunction(0.0, 1.0, rng.uniform(-1, 1, N) + 1j * rng.uniform(-1, 1, N))
        x = np.linspace(0.0, 1.0, 10 * (N - 1) + 1)
        oracle = float(np.abs(f(x)).min())
        worst = max(worst, phi(f, config).hi - oracle)
    ok = worst <= 1e-12
    return CheckResult("phi-identity", ok, f"phi <= 10x-refined grid minimum up to {worst:.1e}")


def propagation(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    """``||(x y) z_n|| <= ||y|| ||x z_n||`` for generated witnesses and corpus multipliers."""
    slack = 2 * config.abs_tol
    worst = -math.inf
    cases = []
    seqs = corpus.sequence_corpus()
    x = seqs["recip"]
    for y in (seqs["prefix_then_const"], seqs["alternating_prefix"], seqs["ones"]):
        cases.append((x, y, sequence.tdz_witness_sequence(x), (1, 10, 100)))
    dc = corpus.disk_corpus()
    f = dc["lf_1"]
    for y in (dc["z_plus_3"], dc["lf_i"], dc["blaschke"]):
        cases.append((f, y, disk.tdz_witness_sequence(f, config), (1, 4, 16)))
    for x, y, w, ns in cases:
        pw = propagate_tdz_witness(w, y, config)
        for n in ns:
            actual = norm((x * y) * _as_element(x, w(n).element), config)
            worst = max(worst, actual.lo - pw(n).product_norm.hi)
    ok = worst <= slack
    return CheckResult("propagation", ok, f"max ||(xy)z_n|| - ||y|| ||x z_n|| = {worst:.2e}")


def _as_element(x, z):
    if isinstance(x, disk.DiskElement) and isinstance(z, disk.ComplexPolynomial):
        return disk.DiskElement(z)
    return z


def coherence(config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    bad = [name for name, x in corpus.full_corpus().items() if classify(x, config).coherence_violations()]
    return CheckResult("classification-coherence", not bad, "no incoherent verdict pairs" + (f"; bad {bad}" if bad else ""))


SUITES: dict = {
    "phi": [phi_coherence, phi_lipschitz, phi_identity, propagation, coherence],
    "blaschke": [unimodularity, isometry, non_tdz],
    "linear-factor": [closed_form_match, closed_form_monotone, dichotomy],
    "bernstein": [weierstrass, bernstein_bound],
    "linf": [linf_table, linf_inverse, linf_witness_monotone],
    "interval": [tent_round_trip, bump_rate],
}
SUITE_NAMES = tuple(SUITES) + ("all",)

CRITERIA: dict = {
    1: [closed_form_match],
    2: [isometry, unimodularity],
    3: [non_tdz],
    4: [tent_round_trip],
    5: [bump_rate],
    6: [weierstrass],
    7: [linf_table],
    8: [phi_coherence, phi_lipschitz],
    9: [dichotomy],
}


def run_suite(name: str, config: Config = DEFAULT_CONFIG, seed: int = 0) -> list:
    if name not in SUITE_NAMES:
        raise KeyError(f"unknown suite {name!r}")
    checks = [c for s in SUITES.values() for c in s] if name == "all" else SUITES[name]
    return [c(config, seed) for c in checks]


def run_criterion(k: int, config: Config = DEFAULT_CONFIG, seed: int = 0) -> CheckResult:
    results = [c(config, seed) for c in CRITERIA[k]]
    return CheckResult(
        " + ".join(r.name for r in results),
        all(r.passed for r in results),
        "; ".join(r.detail for r in results),
        k,
    )
