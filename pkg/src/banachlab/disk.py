"""The disk algebra: functions continuous on the closed unit disk, analytic inside.

Representable elements are products ``P * B`` of a complex polynomial ``P``
and an optional finite Blaschke product ``B``.  By the maximum modulus
principle every sup norm is a maximum over the unit circle, which
:func:`circle_sup_norm` encloses by branch and bound over arcs.  Arc bounds
use the Taylor expansion of ``|f(e^{it})|^2`` with a second-derivative bound
assembled from per-factor angular derivative bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import (
    DEFAULT_CONFIG,
    CertificationFailed,
    Classification,
    Config,
    NormBound,
    NotATDZ,
    NotUnimodular,
    OutsideDomain,
    NotRepresentable,
    Status,
    Verdict,
    WitnessSequence,
    WitnessTerm,
    classify,
    is_unit,
    norm,
    phi,
    unit_verdicts,
)

ZERO_DIVISOR_CITE = "disk algebra: 0 is the only zero divisor (identity principle for analytic functions)"
BLASCHKE_CITE = (
    "disk algebra: a finite Blaschke product B has |B| = 1 on the circle, so ||Bf|| = ||f||; "
    "B is singular but not a topological divisor of zero"
)
LINEAR_FACTOR_CITE = "disk algebra: (z - z0)/2 is a topological divisor of zero iff |z0| = 1"
MAX_MODULUS_CITE = "maximum modulus principle: sup over the closed disk equals max over the unit circle"
TDZ_ZERO_ON_CIRCLE_CITE = (
    "disk algebra: P with a zero w on the circle factors as (z - w) Q; (z - w)/2 is a topological divisor "
    "of zero and multiples of one are again one"
)
TDZ_BOUNDED_BELOW_CITE = "||f b|| >= min over the circle of |f| for unit-norm b, so min |f| > 0 excludes topological divisors of zero"
REGULAR_CITE = "disk algebra: f is invertible iff it has no zero on the closed disk"

UNIMODULAR_TOL = 1e-12
DOMAIN_SLACK = 1e-12
_EPS = np.finfo(float).eps
_MAX_ARCS = 4_000_000


def _readonly(arr) -> np.ndarray:
    arr = np.array(arr, dtype=complex).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ComplexPolynomial:
    """``sum a_k z**k`` with coefficients in ascending order."""

    coefficients: np.ndarray

    def __post_init__(self):
        c = _readonly(self.coefficients)
        if len(c) == 0:
            c = _readonly([0])
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        nz = np.flatnonzero(c)
        c = _readonly(c[: (nz[-1] + 1) if len(nz) else 1])
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def linear_factor(cls, z0) -> "ComplexPolynomial":
        """``(z - z0)/2``."""
        return cls([-complex(z0) / 2, 0.5])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not np.any(self.coefficients)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for c in self.coefficients[::-1]:
            out = out * z + c
        return out[()] if out.ndim == 0 else out

    def derivative(self) -> "ComplexPolynomial":
        k = np.arange(1, len(self.coefficients))
        return ComplexPolynomial(k * self.coefficients[1:]) if len(k) else ComplexPolynomial([0])

    def abs_moments(self):
        """``(sum |a_k|, sum k|a_k|, sum k^2 |a_k|)``: bounds on ``|P|``, ``|dP/dt|``, ``|d2P/dt2|`` over the circle."""
        k = np.arange(len(self.coefficients))
        a = np.abs(self.coefficients)
        return float(a.sum()), float((k * a).sum()), float((k * k * a).sum())

    def __add__(self, other):
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(np.polynomial.polynomial.polyadd(self.coefficients, other.coefficients))
        if np.isscalar(other):
            return self + ComplexPolynomial([other])
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ComplexPolynomial(-self.coefficients)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            return ComplexPolynomial(np.polynomial.polynomial.polymul(self.coefficients, other.coefficients))
        if np.isscalar(other):
            return ComplexPolynomial(self.coefficients * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ComplexPolynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __repr__(self):
        return f"ComplexPolynomial(degree={self.degree})"


@dataclass(frozen=True)
class BlaschkeProduct:
    """``gamma * prod (z - z_i)/(1 - conj(z_i) z)`` with ``|z_i| < 1``, ``|gamma| = 1``."""

    zeros: tuple = ()
    gamma: complex = 1 + 0j

    def __post_init__(self):
        zeros = tuple(complex(z) for z in self.zeros)
        if any(not abs(z) < 1 for z in zeros):
            raise ValueError("Blaschke zeros must lie strictly inside the unit disk")
        gamma = complex(self.gamma)
        if abs(abs(gamma) - 1) > UNIMODULAR_TOL:
            raise ValueError("|gamma| must equal 1")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "gamma", gamma)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.gamma, dtype=complex)
        for a in self.zeros:
            out = out * (z - a) / (1 - np.conj(a) * z)
        return out[()] if out.ndim == 0 else out

    def __mul__(self, other: "BlaschkeProduct") -> "BlaschkeProduct":
        return BlaschkeProduct(self.zeros + other.zeros, self.gamma * other.gamma)


@dataclass(frozen=True, eq=False)
class DiskElement:
    """Pointwise product of a polynomial and an optional Blaschke product."""

    poly: ComplexPolynomial = field(default_factory=lambda: ComplexPolynomial([1]))
    blaschke: Optional[BlaschkeProduct] = None

    def __post_init__(self):
        if not isinstance(self.poly, ComplexPolynomial):
            object.__setattr__(self, "poly", ComplexPolynomial(self.poly))

    @classmethod
    def linear_factor(cls, z0) -> "DiskElement":
        return cls(ComplexPolynomial.linear_factor(z0))

    @property
    def zeros_in_disk(self) -> tuple:
        return self.blaschke.zeros if self.blaschke else ()

    def __call__(self, z):
        return evaluate(self, z)

    def _blaschke_key(self):
        if self.blaschke is None or not self.blaschke.zeros and self.blaschke.gamma == 1:
            return None
        return self.blaschke

    def __mul__(self, other):
        if isinstance(other, DiskElement):
            bl = [b for b in (self.blaschke, other.blaschke) if b is not None]
            prod_b = bl[0] * bl[1] if len(bl) == 2 else (bl[0] if bl else None)
            return DiskElement(self.poly * other.poly, prod_b)
        if isinstance(other, ComplexPolynomial) or np.isscalar(other):
            return DiskElement(self.poly * other, self.blaschke)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, DiskElement):
            if self._blaschke_key() != other._blaschke_key():
                raise NotRepresentable("sum of elements with different Blaschke parts")
            return DiskElement(self.poly + other.poly, self.blaschke)
        if np.isscalar(other) and self._blaschke_key() is None:
            return DiskElement(self.poly + other, self.blaschke)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return DiskElement(-self.poly, self.blaschke)

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        nz = len(self.zeros_in_disk)
        return f"DiskElement(poly degree={self.poly.degree}, blaschke zeros={nz})"


def evaluate(f: DiskElement, z):
    """Value of ``f`` at ``z`` in the closed disk."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1 + DOMAIN_SLACK):
        raise OutsideDomain("evaluation point outside the closed unit disk")
    out = f.poly(z)
    if f.blaschke is not None:
        out = out * f.blaschke(z)
    return out


# ---------------------------------------------------------------------------
# certified circle extrema


def _factor_bounds(f: DiskElement):
    """Global bounds on ``|f_j|`` and its first three angular derivatives, per factor."""
    c = np.abs(f.poly.coefficients)
    k = np.arange(len(c), dtype=float)
    out = [tuple(float((k**m * c).sum()) for m in range(4))]
    if f.blaschke is not None:
        for a in f.blaschke.zeros:
            r = abs(a)
            q = (1 + r) / (1 - r)
            out.append((q, q, q * q, q * (1 + 4 * r + r * r) / (1 - r) ** 2))
    return np.array(out)


def _factor_values(f: DiskElement, z: np.ndarray):
    """Values and first two angular derivatives ``d/dt f_j(e^{it})`` of every factor."""
    P = f.poly
    k = np.arange(len(P.coefficients))
    vals = [P(z)]
    ders = [ComplexPolynomial(1j * k * P.coefficients)(z)]
    ders2 = [ComplexPolynomial(-(k**2) * P.coefficients)(z)]
    scale = 1.0
    if f.blaschke is not None:
        scale = f.blaschke.gamma
        for a in f.blaschke.zeros:
            ac = np.conj(a)
            den = 1 - ac * z
            vals.append((z - a) / den)
            ders.append(1j * z * (1 - abs(a) ** 2) / den**2)
            ders2.append(-z * (1 - abs(a) ** 2) * (1 + ac * z) / den**3)
    return np.array(vals), np.array(ders), np.array(ders2), scale


def _arc_data(f: DiskElement, bounds: np.ndarray, theta: np.ndarray, delta: float):
    """Center values of F and its first two derivatives, plus arc-wide bounds on |F| and three derivatives."""
    z = np.exp(1j * theta)
    vals, ders, ders2, gamma = _factor_values(f, z)
    F = np.full(z.shape, gamma, dtype=complex)
    dF = np.zeros_like(F)
    d2F = np.zeros_like(F)
    M = np.full(z.shape, abs(gamma))
    D1 = np.zeros_like(M)
    D2 = np.zeros_like(M)
    D3 = np.zeros_like(M)
    for j in range(len(vals)):
        gm, g1, g2, g3 = bounds[j]
        v, v1, v2 = vals[j], ders[j], ders2[j]
        e2 = np.minimum(g2, np.abs(v2) + g3 * delta)
        e1 = np.minimum(g1, np.abs(v1) + e2 * delta)
        m = np.minimum(gm, np.abs(v) + e1 * delta)
        d2F = d2F * v + 2 * dF * v1 + F * v2
        dF = dF * v + F * v1
        F = F * v
        # Leibniz rule on bounds over the arc
        D3 = D3 * m + 3 * D2 * e1 + 3 * D1 * e2 + M * g3
        D2 = D2 * m + 2 * D1 * e1 + M * e2
        D1 = D1 * m + M * e1
        M = M * m
    return F, dF, d2F, M, D1, D2, D3


def _rounding_pad(f: DiskElement, sample_max: float) -> float:
    k = len(f.zeros_in_disk)
    return _EPS * (4 * (f.poly.degree + 1) + 8 * k + 8) * max(f.poly.abs_moments()[0], sample_max, 1e-300)


def _circle_extreme(f: DiskElement, config: Config, mode: str, hints: Iterable[complex] = ()):
    """Enclosure of max (``mode='max'``) or min of ``|f|`` over the circle.

    Returns ``(NormBound, t_best)`` with ``t_best`` an angle where the best
    sampled value was observed.
    """
    tol = config.abs_tol
    bounds = _factor_bounds(f)
    N = config.circle_samples
    delta = math.pi / N
    theta = (np.arange(N) + 0.5) * (2 * math.pi / N)
    hints = [complex(h) for h in hints]
    is_max = mode == "max"
    best = -math.inf if is_max else math.inf
    t_best = 0.0
    if hints:
        hv = np.abs(evaluate(f, np.array(hints)))
        i = int(np.argmax(hv) if is_max else np.argmin(hv))
        best = float(hv[i])
        t_best = float(np.angle(hints[i]))
    pruned = best
    pad = None
    for _ in range(config.refine_max_iters):
        F, dF, d2F, M, D1, D2, D3 = _arc_data(f, bounds, theta, delta)
        absF = np.abs(F)
        G = absF**2
        Gp = 2 * (dF * F.conj()).real
        Gpp = np.abs(2 * (np.abs(dF) ** 2 + (d2F * F.conj()).real))
        G2 = 2 * (D2 * M + D1**2)
        G3 = 2 * (3 * D2 * D1 + D3 * M)
        i = int(np.argmax(absF) if is_max else np.argmin(absF))
        if (absF[i] > best) if is_max else (absF[i] < best):
            best = float(absF[i])
            t_best = float(theta[i])
        if pad is None:
            pad = _rounding_pad(f, float(absF.max()))
            pruned = best
        # Taylor bounds on G = |F|^2 over the arc, second and third order
        spread = np.abs(Gp) * delta + np.minimum(0.5 * G2 * delta**2, 0.5 * Gpp * delta**2 + G3 * delta**3 / 6)
        if is_max:
            bound = np.minimum(np.sqrt(G + spread), absF + D1 * delta)
            keep = (bound + pad) - (best - pad) > tol
            if (~keep).any():
                pruned = max(pruned, float(bound[~keep].max()))
        else:
            bound = np.maximum(np.sqrt(np.maximum(G - spread, 0.0)), absF - D1 * delta)
            keep = (best + pad) - (bound - pad) > tol
            if (~keep).any():
                pruned = min(pruned, float(bound[~keep].min()))
        if not keep.any():
            if is_max:
                return NormBound(best - pad, max(pruned, best) + pad), t_best
            return NormBound(min(pruned, best) - pad, best + pad), t_best
        kept = theta[keep]
        if 2 * len(kept) > _MAX_ARCS:
            break
        delta /= 2
        theta = np.concatenate([kept - delta, kept + delta])
    if is_max:
        partial = NormBound(best - (pad or 0.0), math.inf)
    else:
        partial = NormBound(0.0, best + (pad or 0.0))
    raise CertificationFailed(f"circle {mode} of |f| not certified to width {tol:g}", partial)


def circle_sup_norm(f: DiskElement, config: Config = DEFAULT_CONFIG, hints: Iterable[complex] = ()) -> NormBound:
    """Certified enclosure of ``max |f|`` over the unit circle, which equals ``||f||``."""
    if f.poly.is_zero:
        return NormBound.exact(0.0)
    return _circle_extreme(f, config, "max", hints)[0]


def circle_min_modulus(f: DiskElement, config: Config = DEFAULT_CONFIG, hints: Iterable[complex] = ()):
    """Certified enclosure of ``min |f|`` over the unit circle and an angle near the minimizer."""
    if f.poly.is_zero:
        return NormBound.exact(0.0), 0.0
    return _circle_extreme(f, config, "min", hints)


@norm.register
def _(f: DiskElement, config: Config = DEFAULT_CONFIG) -> NormBound:
    return circle_sup_norm(f, config)


@norm.register
def _(p: ComplexPolynomial, config: Config = DEFAULT_CONFIG) -> NormBound:
    return circle_sup_norm(DiskElement(p), config)


@norm.register
def _(B: BlaschkeProduct, config: Config = DEFAULT_CONFIG) -> NormBound:
    return circle_sup_norm(DiskElement(ComplexPolynomial([1]), B), config)


@is_unit.register
def _(f: DiskElement) -> bool:
    return f._blaschke_key() is None and f.poly.degree == 0 and f.poly.coefficients[0] == 1


def unimodularity_deviation(B: BlaschkeProduct, samples: int = 2**16) -> float:
    """``max | |B(z)| - 1 |`` over ``samples`` equispaced points of the circle."""
    z = np.exp(2j * np.pi * np.arange(samples) / samples)
    return float(np.max(np.abs(np.abs(B(z)) - 1)))


# ---------------------------------------------------------------------------
# roots on the circle and classification


def unit_modulus_regime(z0: complex):
    """Decide ``|z0| = 1``: returns ``(on_circle, regime)``.

    The exact regime squares the binary float components as rationals; the
    tolerance regime accepts ``||z0| - 1| <= 1e-12``.
    """
    z0 = complex(z0)
    re, im = Fraction(z0.real), Fraction(z0.imag)
    if re * re + im * im == 1:
        return True, "exact"
    if abs(abs(z0) - 1) <= UNIMODULAR_TOL:
        return True, "tolerance"
    return False, "exact" if abs(abs(z0) - 1) > 1e-6 else "tolerance"


def circle_roots(P: ComplexPolynomial) -> list:
    """Zeros of ``P`` on the unit circle as ``(w, regime)`` pairs."""
    c = P.coefficients
    if P.degree < 1:
        return []
    if P.degree == 1:
        cands = [-c[0] / c[1]]
    else:
        cands = list(np.roots(c[::-1]))
    out = []
    for r in cands:
        on, regime = unit_modulus_regime(r)
        if on:
            out.append((complex(r), regime))
    return out


def winding_number(P: ComplexPolynomial, min_modulus_lo: float, max_samples: int = 1 << 22) -> Optional[int]:
    """Number of zeros of ``P`` inside the disk, by the argument principle.

    Needs a certified positive lower bound on ``|P|`` over the circle; sampling
    is fine enough that consecutive values differ by less than that bound,
    so no turn of the argument is missed.  Returns None if that would need
    more than ``max_samples`` points.
    """
    if min_modulus_lo <= 0:
        return None
    _, d1, _ = P.abs_moments()
    n = max(64, int(math.ceil(2 * math.pi * d1 / (0.5 * min_modulus_lo))) + 1)
    if n > max_samples:
        return None
    z = np.exp(2j * np.pi * np.arange(n + 1) / n)
    v = P(z)
    return int(round(float(np.sum(np.angle(v[1:] / v[:-1]))) / (2 * math.pi)))


def zero_divisor_test(f: DiskElement) -> Verdict:
    """Proved iff ``f`` is identically zero."""
    if f.poly.is_zero:
        return Verdict.proved("f is identically zero; f * 1 = 0", cite=ZERO_DIVISOR_CITE)
    return Verdict.refuted("f is not identically zero", cite=ZERO_DIVISOR_CITE)


def _classify_disk(f: DiskElement, config: Config = DEFAULT_CONFIG) -> Classification:
    zd = zero_divisor_test(f)
    if f.poly.is_zero:
        tdz = Verdict.proved("zero element: 0 * 1 = 0", cite=ZERO_DIVISOR_CITE)
        reg = Verdict.refuted("zero element", cite=REGULAR_CITE)
        return unit_verdicts(reg, zd, tdz)
    roots = circle_roots(f.poly)
    if roots:
        w, regime = roots[0]
        cert = {"zero_on_circle": w, "regime": regime}
        tdz = Verdict.proved("f vanishes on the unit circle", cert, TDZ_ZERO_ON_CIRCLE_CITE)
        reg = Verdict.refuted("f vanishes on the closed disk", cert, REGULAR_CITE)
        return unit_verdicts(reg, zd, tdz)
    try:
        mn, _ = circle_min_modulus(f, config)
    except CertificationFailed as exc:
        mn = exc.bound
    if mn.lo <= 0:
        tdz = Verdict.unknown("min |f| on the circle not separated from 0", {"circle_min": mn})
        reg = Verdict.unknown("zeros near the circle could not be located", {"circle_min": mn})
        return unit_verdicts(reg, zd, tdz)
    cites = (TDZ_BOUNDED_BELOW_CITE, BLASCHKE_CITE) if f.zeros_in_disk else (TDZ_BOUNDED_BELOW_CITE,)
    tdz = Verdict.refuted("min |f| on the circle is positive", {"circle_min": mn}, cites)
    if f.zeros_in_disk:
        reg = Verdict.refuted(
            "the Blaschke factor vanishes inside the disk", {"zero": f.zeros_in_disk[0]}, (REGULAR_CITE, BLASCHKE_CITE)
        )
        return unit_verdicts(reg, zd, tdz)
    # |P| >= |f| / max|B| on the circle; with no Blaschke part they coincide
    wn = winding_number(f.poly, mn.lo)
    if wn is None:
        reg = Verdict.unknown("winding number not certified", {"circle_min": mn})
    elif wn == 0:
        reg = Verdict.proved("no zero in the closed disk", {"winding_number": 0, "circle_min": mn}, REGULAR_CITE)
    else:
        reg = Verdict.refuted(f"{wn} zero(s) inside the disk", {"winding_number": wn}, REGULAR_CITE)
    return unit_verdicts(reg, zd, tdz)


classify.register(DiskElement, _classify_disk)


@phi.register
def _(f: DiskElement, config: Config = DEFAULT_CONFIG) -> NormBound:
    """Enclosure of phi(f); only the lower bound ``min |f|`` is sharp in general."""
    if f.poly.is_zero or circle_roots(f.poly):
        return NormBound.exact(0.0)
    mn, t = circle_min_modulus(f, config)
    best = circle_sup_norm(f, config).hi
    w = complex(np.exp(1j * t))
    # peaking multipliers ((1 + conj(w) z)/2)^n have norm 1, attained at w
    peak = ComplexPolynomial([0.5, 0.5 * np.conj(w)])
    for n in (4, 32, 256):
        try:
            best = min(best, circle_sup_norm(f * peak**n, config).hi)
        except CertificationFailed:
            continue
    return NormBound(mn.lo, max(best, mn.lo))


# ---------------------------------------------------------------------------
# Blaschke products and linear factors


def blaschke_isometry_check(B: BlaschkeProduct, f: ComplexPolynomial, config: Config = DEFAULT_CONFIG) -> Verdict:
    """Compare independent enclosures of ``||B f||`` and ``||f||``."""
    nbf = circle_sup_norm(DiskElement(f, B), config)
    nf = circle_sup_norm(DiskElement(f), config)
    cert = {"norm_Bf": nbf, "norm_f": nf, "deviation": max(nbf.hi, nf.hi) - min(nbf.lo, nf.lo)}
    if nbf.overlaps(nf, slack=config.abs_tol):
        return Verdict.proved("||Bf|| and ||f|| enclosures overlap", cert, BLASCHKE_CITE)
    return Verdict.refuted("||Bf|| and ||f|| enclosures are disjoint", cert, BLASCHKE_CITE)


def blaschke_non_tdz_certificate(
    B: BlaschkeProduct,
    trial_fs: Sequence[ComplexPolynomial],
    config: Config = DEFAULT_CONFIG,
    tol: float = 1e-8,
) -> Verdict:
    """Check ``||B g|| >= ||g|| - tol`` over a finite trial set.

    The certificate records the smallest ratio ``||B g|| / ||g||`` (lower
    enclosure end over upper enclosure end).  The trial set only samples the
    quantifier over all ``g``; the isometry is what makes it hold for all.
    """
    if not trial_fs:
        raise ValueError("need at least one trial polynomial")
    ratios = []
    shortfall = 0.0
    for g in trial_fs:
        ng = circle_sup_norm(DiskElement(g), config)
        nbg = circle_sup_norm(DiskElement(g, B), config)
        if ng.hi == 0:
            continue
        ratios.append(nbg.lo / ng.hi)
        shortfall = max(shortfall, ng.lo - nbg.lo)
    min_ratio = min(ratios) if ratios else 1.0
    cert = {"min_ratio": min_ratio, "trials": len(trial_fs), "max_shortfall": shortfall}
    if min_ratio >= 1 - tol:
        return Verdict.proved("no trial multiplier shrinks under B", cert, BLASCHKE_CITE)
    return Verdict.refuted("a trial multiplier shrank under B", cert, BLASCHKE_CITE)


def closed_form_witness_norm(n: int) -> float:
    """``||f f_n||`` for ``f = (z - z0)/2``, ``f_n = ((z + z0)/2)^n``, ``|z0| = 1``.

    On the circle ``|f f_n| = |sin s| cos^n s`` with ``s`` half the angle to
    ``z0``; the maximum sits at ``tan^2 s = 1/n``.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return (1 / math.sqrt(1 + n)) * (n / (n + 1)) ** (n / 2)


def linear_factor_classify(z0, config: Config = DEFAULT_CONFIG) -> Classification:
    """Classify ``(z - z0)/2`` in the disk algebra."""
    z0 = complex(z0)
    r = abs(z0)
    on, regime = unit_modulus_regime(z0)
    zd = Verdict.refuted("(z - z0)/2 is not identically zero", cite=ZERO_DIVISOR_CITE)
    if on:
        cert = {"modulus": r, "regime": regime}
        tdz = Verdict.proved("|z0| = 1", cert, LINEAR_FACTOR_CITE)
        reg = Verdict.refuted("zero z0 on the closed disk", cert, REGULAR_CITE)
        return unit_verdicts(reg, zd, tdz)
    f = DiskElement.linear_factor(z0)
    mn, _ = circle_min_modulus(f, config)
    cert = {
        "modulus": r,
        "regime": regime,
        "annulus_dist_to_z0": [abs(1 - r), 1 + r],
        "annulus_abs_f": [abs(1 - r) / 2, (1 + r) / 2],
        "circle_min": mn,
    }
    tdz = Verdict.refuted("|z0| != 1, so |f| >= |1 - r|/2 > 0 on the circle", cert, (LINEAR_FACTOR_CITE, TDZ_BOUNDED_BELOW_CITE))
    if r > 1:
        reg = Verdict.proved("the only zero z0 lies outside the closed disk", cert, REGULAR_CITE)
    else:
        reg = Verdict.refuted("zero z0 inside the disk", cert, REGULAR_CITE)
    return unit_verdicts(reg, zd, tdz)


def linear_factor_witness(z0, n: int, config: Config = DEFAULT_CONFIG):
    """``(f_n, ||f_n||, ||f f_n||)`` with ``f_n = ((z + z0)/2)^n`` and ``f = (z - z0)/2``."""
    z0 = complex(z0)
    on, _ = unit_modulus_regime(z0)
    if not on:
        raise NotUnimodular(f"|z0| = {abs(z0)} is not 1")
    if n < 1:
        raise ValueError("n must be a positive integer")
    fn = ComplexPolynomial([z0 / 2, 0.5]) ** n
    unit = circle_sup_norm(DiskElement(fn), config, hints=[z0])
    prod = circle_sup_norm(DiskElement(ComplexPolynomial.linear_factor(z0) * fn), config)
    return fn, unit, prod


def tdz_witness_sequence(f: DiskElement, config: Config = DEFAULT_CONFIG) -> WitnessSequence:
    """Peaking multipliers ``((z + w)/2)^n`` at a zero ``w`` of ``f`` on the circle."""
    if f.poly.is_zero:
        one = ComplexPolynomial([1])
        return WitnessSequence(
            "constant 1 annihilated by the zero element",
            lambda n: WitnessTerm(n, one, NormBound.exact(1.0), NormBound.exact(0.0)),
        )
    roots = circle_roots(f.poly)
    if not roots:
        raise NotATDZ("no certified zero of f on the unit circle")
    w, regime = roots[0]

    def gen(n):
        fn = ComplexPolynomial([w / 2, 0.5]) ** n
        unit = circle_sup_norm(DiskElement(fn), config, hints=[w])
        prod = circle_sup_norm(f * fn, config)
        return WitnessTerm(n, fn, unit, prod)

    return WitnessSequence(f"peaking polynomials ((z + w)/2)^n at w = {w:.12g}", gen, metadata={"zero": w, "regime": regime})
