"""The algebra C[a,b] of continuous complex functions under the sup norm.

Elements are modelled by two exact-enough representations:

* :class:`GridFunction` -- continuous piecewise-linear interpolant of node
  values.  Sup norm, infimum of ``|f|`` and the zero set are computed exactly
  (up to one rounding per formula).
* :class:`RealPolynomial` -- polynomial in the real variable ``x`` on
  ``[a, b]``, in monomial or Bernstein basis.  Norms are certified
  enclosures obtained by Bernstein subdivision.

Classification follows the two characterizations for C[a,b]: ``f`` is a zero
divisor iff its zero set has nonempty interior, and a topological divisor of
zero iff it vanishes somewhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
from scipy.special import comb

from . import bernstein as bz
from .core import (
    DEFAULT_CONFIG,
    Classification,
    Config,
    NormBound,
    NotAZero,
    NotAZeroDivisor,
    Verdict,
    WitnessSequence,
    WitnessTerm,
    classify,
    is_unit,
    norm,
    phi,
    unit_verdicts,
)

ZERO_DIVISOR_CITE = "C[a,b]: f is a zero divisor iff its zero set contains a nonempty open interval"
TDZ_CITE = "C[a,b]: f is a topological divisor of zero iff f vanishes at some point of [a,b]"
REGULAR_CITE = "C[a,b]: f is invertible iff it has no zero, the inverse being 1/f"
WEIERSTRASS_CITE = "Weierstrass: polynomials are uniformly dense in C[a,b] (realized by Bernstein polynomials)"


def _readonly(arr) -> np.ndarray:
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Piecewise-linear function through ``(nodes[k], values[k])``.

    Nodes default to the uniform grid over ``[a, b]``; any strictly increasing
    node set with endpoints ``a`` and ``b`` is accepted.
    """

    a: float
    b: float
    values: np.ndarray
    nodes: Optional[np.ndarray] = None

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError("a and b must be finite")
        if not a < b:
            raise ValueError("a must be < b")
        values = _readonly(self.values)
        if values.ndim != 1 or len(values) < 2:
            raise ValueError("values must hold at least 2 entries")
        if not np.all(np.isfinite(values)):
            raise ValueError("values must be finite")
        if self.nodes is None:
            nodes = np.linspace(a, b, len(values))
        else:
            nodes = np.array(self.nodes, dtype=float)
            if nodes.shape != values.shape:
                raise ValueError("nodes and values must have equal length")
            if nodes[0] != a or nodes[-1] != b or np.any(np.diff(nodes) <= 0):
                raise ValueError("nodes must increase strictly from a to b")
        nodes.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "nodes", nodes)

    @classmethod
    def from_function(cls, fn, a: float, b: float, n_nodes: int) -> "GridFunction":
        x = np.linspace(a, b, n_nodes)
        return cls(a, b, np.asarray(fn(x), dtype=complex) * np.ones_like(x))

    @classmethod
    def constant(cls, value, a: float = 0.0, b: float = 1.0) -> "GridFunction":
        return cls(a, b, [value, value])

    @property
    def is_uniform(self) -> bool:
        return bool(np.array_equal(self.nodes, np.linspace(self.a, self.b, len(self.nodes))))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any((x < self.a) | (x > self.b)):
            raise ValueError(f"evaluation point outside [{self.a}, {self.b}]")
        idx = np.clip(np.searchsorted(self.nodes, x, side="right") - 1, 0, len(self.nodes) - 2)
        x0 = self.nodes[idx]
        x1 = self.nodes[idx + 1]
        v0 = self.values[idx]
        v1 = self.values[idx + 1]
        t = (x - x0) / (x1 - x0)
        out = np.where(t == 0, v0, np.where(t == 1, v1, v0 + t * (v1 - v0)))
        return out[()] if out.ndim == 0 else out

    def on_nodes(self, nodes) -> "GridFunction":
        """Same function sampled on a finer node set (must include own nodes)."""
        nodes = np.union1d(np.asarray(nodes, dtype=float), self.nodes)
        return GridFunction(self.a, self.b, self(nodes), nodes)

    def _aligned(self, other: "GridFunction"):
        if (self.a, self.b) != (other.a, other.b):
            raise ValueError("grid functions live on different intervals")
        if np.array_equal(self.nodes, other.nodes):
            return self, other
        nodes = np.union1d(self.nodes, other.nodes)
        return self.on_nodes(nodes), other.on_nodes(nodes)

    def __add__(self, other):
        if isinstance(other, GridFunction):
            f, g = self._aligned(other)
            return GridFunction(f.a, f.b, f.values + g.values, f.nodes)
        if isinstance(other, RealPolynomial):
            return _grid_minus_poly(self, -other)
        if np.isscalar(other):
            return GridFunction(self.a, self.b, self.values + other, self.nodes)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GridFunction(self.a, self.b, -self.values, self.nodes)

    def __sub__(self, other):
        if isinstance(other, RealPolynomial):
            return _grid_minus_poly(self, other)
        return self + (-other)

    def __mul__(self, other):
        # only scalar multiples stay piecewise linear
        if np.isscalar(other):
            return GridFunction(self.a, self.b, self.values * other, self.nodes)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self):
        return f"GridFunction(a={self.a}, b={self.b}, n_nodes={len(self.nodes)})"


@dataclass(frozen=True)
class ZeroStructure:
    intervals: tuple = ()
    points: tuple = ()

    @property
    def empty(self) -> bool:
        return not self.intervals and not self.points

    def first_zero(self) -> float:
        cands = [iv[0] for iv in self.intervals] + list(self.points)
        return min(cands)

    def contains(self, x: float, slack: float = 0.0) -> bool:
        if any(c - slack <= x <= d + slack for c, d in self.intervals):
            return True
        return any(abs(p - x) <= slack for p in self.points)


def _segment_analysis(f: GridFunction):
    """Per-segment exact root data shared by the zero set and ``min |f|``."""
    v0 = f.values[:-1]
    v1 = f.values[1:]
    cross = v0.real * v1.imag - v0.imag * v1.real
    dot = v0.real * v1.real + v0.imag * v1.imag
    both_zero = (v0 == 0) & (v1 == 0)
    interior_root = (v0 != 0) & (v1 != 0) & (cross == 0) & (dot < 0)
    return v0, v1, cross, both_zero, interior_root


def zero_structure(f: GridFunction) -> ZeroStructure:
    """Exact zero set of the piecewise-linear interpolant."""
    x = f.nodes
    v0, v1, _, both_zero, interior_root = _segment_analysis(f)
    intervals = []
    for k in np.flatnonzero(both_zero):
        lo, hi = float(x[k]), float(x[k + 1])
        if intervals and intervals[-1][1] == lo:
            intervals[-1] = (intervals[-1][0], hi)
        else:
            intervals.append((lo, hi))
    points = set()
    for k in np.flatnonzero(f.values == 0):
        xk = float(x[k])
        if not any(c <= xk <= d for c, d in intervals):
            points.add(xk)
    for k in np.flatnonzero(interior_root):
        a0, a1 = abs(v0[k]), abs(v1[k])
        points.add(float(x[k] + a0 / (a0 + a1) * (x[k + 1] - x[k])))
    return ZeroStructure(tuple(intervals), tuple(sorted(points)))


def min_modulus(f: GridFunction) -> float:
    """Exact ``min |f|``: node moduli and the foot of the perpendicular per segment."""
    v0, v1, cross, both_zero, interior_root = _segment_analysis(f)
    best = float(np.abs(f.values).min())
    if best == 0 or interior_root.any():
        return 0.0
    d = v1 - v0
    dd = (d * d.conjugate()).real
    with np.errstate(divide="ignore", invalid="ignore"):
        t = -(v0.conjugate() * d).real / dd
        dist = np.abs(cross) / np.sqrt(dd)
    inside = (dd > 0) & (t > 0) & (t < 1) & (cross != 0)
    if inside.any():
        best = min(best, float(dist[inside].min()))
    return best


def sup_norm(f, config: Config = DEFAULT_CONFIG) -> NormBound:
    """Sup norm of a grid function (exact) or polynomial (certified)."""
    return norm(f, config)


@norm.register
def _(f: GridFunction, config: Config = DEFAULT_CONFIG) -> NormBound:
    # |f| is convex along each segment, so the maximum sits at a node
    return NormBound.exact(float(np.abs(f.values).max()))


def product_sup_norm(f: GridFunction, g: GridFunction) -> NormBound:
    """Exact ``||f g||`` for two piecewise-linear functions.

    On the merged node set the product is a quadratic per segment; its
    modulus is maximized at a segment end or at a real critical point.
    """
    f, g = f._aligned(g)
    F0, F1 = f.values[:-1], f.values[1:]
    G0, G1 = g.values[:-1], g.values[1:]
    dF, dG = F1 - F0, G1 - G0
    best = float(np.abs(f.values * g.values).max())
    real = (F0.imag == 0) & (dF.imag == 0) & (G0.imag == 0) & (dG.imag == 0)
    A = dF * dG
    B = F0 * dG + G0 * dF
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(A != 0, -B / (2 * A), -1.0).real
    hit = real & (A != 0) & (s > 0) & (s < 1)
    if hit.any():
        sv = s[hit]
        vals = (F0[hit] + sv * dF[hit]) * (G0[hit] + sv * dG[hit])
        best = max(best, float(np.abs(vals).max()))
    # complex segments: critical points of |p(s)|^2 solve a real cubic
    cplx = np.flatnonzero(~real)
    if len(cplx):
        bound = np.maximum(np.abs(F0), np.abs(F1)) * np.maximum(np.abs(G0), np.abs(G1))
        C = F0 * G0
        for k in cplx:
            if bound[k] <= best:
                continue
            Ak, Bk, Ck = A[k], B[k], C[k]
            cubic = [
                2 * abs(Ak) ** 2,
                3 * (Ak.conjugate() * Bk).real,
                abs(Bk) ** 2 + 2 * (Ck.conjugate() * Ak).real,
                (Ck.conjugate() * Bk).real,
            ]
            while cubic and cubic[0] == 0:
                cubic.pop(0)
            if len(cubic) < 2:
                continue
            for r in np.roots(cubic):
                if abs(r.imag) < 1e-12 and 0 < r.real < 1:
                    sr = r.real
                    best = max(best, abs((F0[k] + sr * dF[k]) * (G0[k] + sr * dG[k])))
    return NormBound.exact(best)


def _check_zero(f: GridFunction, c: float):
    if not f.a <= c <= f.b:
        raise NotAZero(f"c={c} lies outside [{f.a}, {f.b}]")
    if f(c) == 0:
        return
    zs = zero_structure(f)
    if not zs.contains(c, slack=1e-12 * (f.b - f.a)):
        raise NotAZero(f"f(c) = {complex(f(c))} is not zero at c={c}")


def _classify_grid(f: GridFunction, config: Config = DEFAULT_CONFIG) -> Classification:
    zs = zero_structure(f)
    m = min_modulus(f)
    if zs.intervals:
        zd = Verdict.proved(
            "zero set contains an interval", {"interval": list(zs.intervals[0])}, ZERO_DIVISOR_CITE
        )
    else:
        zd = Verdict.refuted(
            "zero set has empty interior", {"isolated_zeros": list(zs.points)}, ZERO_DIVISOR_CITE
        )
    if zs.empty:
        tdz = Verdict.refuted("f has no zero", {"min_modulus": m}, TDZ_CITE)
        reg = Verdict.proved("f has no zero; 1/f is continuous", {"min_modulus": m}, REGULAR_CITE)
    else:
        first = zs.first_zero()
        tdz = Verdict.proved("f vanishes on [a,b]", {"zero": first}, TDZ_CITE)
        reg = Verdict.refuted("f vanishes on [a,b]", {"zero": first}, REGULAR_CITE)
    return unit_verdicts(reg, zd, tdz, cite_singular=(REGULAR_CITE,))


classify.register(GridFunction, _classify_grid)


@phi.register
def _(f: GridFunction, config: Config = DEFAULT_CONFIG) -> NormBound:
    # a bump at the minimizer of |f| shows phi <= min|f|; |fb| >= min|f| |b| the converse
    return NormBound.exact(min_modulus(f))


@is_unit.register
def _(f: GridFunction) -> bool:
    return bool(np.all(f.values == 1))


def zero_divisor_witness(f: GridFunction) -> GridFunction:
    """Tent function supported on the widest zero interval of ``f``.

    The tent rises with slope 1 from ``c``, peaks at the midpoint with height
    ``(d - c)/2`` and falls back to 0 at ``d``; ``f * g`` vanishes identically.
    """
    zs = zero_structure(f)
    if not zs.intervals:
        raise NotAZeroDivisor("zero set of f contains no interval")
    # widest first, leftmost on ties
    c, d = min(zs.intervals, key=lambda iv: (-(iv[1] - iv[0]), iv[0]))
    mid = 0.5 * (c + d)
    nodes = np.union1d(f.nodes, [mid])
    peak = (d - c) / 2
    vals = np.zeros(len(nodes))
    rise = (nodes > c) & (nodes < mid)
    fall = (nodes > mid) & (nodes < d)
    vals[rise] = nodes[rise] - c
    vals[fall] = d - nodes[fall]
    vals[nodes == mid] = peak
    return GridFunction(f.a, f.b, vals, nodes)


def bump(a: float, b: float, c: float, n: int) -> GridFunction:
    """``max(0, 1 - n|x - c|)`` on [a, b], with ``c`` and ``c ± 1/n`` as nodes."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not a <= c <= b:
        raise ValueError("c must lie in [a, b]")
    h = 1.0 / n
    pts = {a, b, c}
    if c - h > a:
        pts.add(c - h)
    if c + h < b:
        pts.add(c + h)
    nodes = np.array(sorted(pts))
    vals = np.maximum(0.0, 1.0 - n * np.abs(nodes - c))
    vals[nodes == c] = 1.0
    vals[(nodes == c - h) | (nodes == c + h)] = 0.0
    return GridFunction(a, b, vals, nodes)


def tdz_bump_witness(f: GridFunction, c: float, n: int):
    """Unit-norm bump at the zero ``c`` and the exact norm of ``f * bump``.

    Returns ``(g_n, ||g_n||, ||f g_n||)``.  The product norm is at most
    ``max |f|`` over ``[c - 1/n, c + 1/n]`` and tends to 0 by continuity.
    """
    _check_zero(f, c)
    g = bump(f.a, f.b, c, n)
    return g, NormBound.exact(float(np.abs(g.values).max())), product_sup_norm(f, g)


def bump_witness_sequence(f: GridFunction, c: Optional[float] = None) -> WitnessSequence:
    if c is None:
        zs = zero_structure(f)
        if zs.empty:
            raise NotAZero("f has no zero")
        c = zs.first_zero()
    _check_zero(f, c)

    def gen(n):
        g, unit, prod = tdz_bump_witness(f, c, n)
        return WitnessTerm(n, g, unit, prod)

    return WitnessSequence(f"bumps max(0, 1 - n|x - {c:.12g}|)", gen, metadata={"zero": c})


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True, eq=False)
class RealPolynomial:
    """Polynomial in ``x`` on ``[a, b]``.

    ``basis='monomial'`` stores ``sum c_j x**j``; ``basis='bernstein'`` stores
    Bernstein coefficients with respect to ``t = (x - a)/(b - a)``, which stays
    well conditioned at the degrees used for Weierstrass approximation.
    """

    coefficients: np.ndarray
    a: float = 0.0
    b: float = 1.0
    basis: str = "monomial"

    def __post_init__(self):
        if self.basis not in ("monomial", "bernstein"):
            raise ValueError(f"unknown basis {self.basis!r}")
        if not float(self.a) < float(self.b):
            raise ValueError("a must be < b")
        coeffs = _readonly(self.coefficients)
        if coeffs.ndim != 1 or len(coeffs) == 0:
            raise ValueError("need at least one coefficient")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))

    @property
    def degree(self) -> int:
        c = self.monomial_coefficients() if self.basis == "bernstein" else self.coefficients
        nz = np.flatnonzero(c)
        return int(nz[-1]) if len(nz) else 0

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.basis == "monomial":
            out = np.polynomial.polynomial.polyval(x, self.coefficients)
        else:
            t = (x - self.a) / (self.b - self.a)
            flat = np.atleast_1d(t).ravel()
            rows = np.broadcast_to(self.coefficients, (len(flat), len(self.coefficients)))
            out = bz.de_casteljau(rows, flat).reshape(np.shape(t))
        return out[()] if np.ndim(out) == 0 else out

    def bernstein_coefficients(self) -> np.ndarray:
        if self.basis == "bernstein":
            return self.coefficients
        w = self.b - self.a
        P = np.polynomial.polynomial
        d = np.zeros(1, dtype=complex)
        for cj in self.coefficients[::-1]:
            d = P.polyadd(P.polymul(d, [self.a, w]), [cj])
        L = len(self.coefficients)
        return bz.from_power(np.pad(d, (0, max(0, L - len(d))))[:L])

    def monomial_coefficients(self) -> np.ndarray:
        if self.basis == "monomial":
            return self.coefficients
        d = bz.to_power(self.coefficients)
        P = np.polynomial.polynomial
        w = self.b - self.a
        out = np.zeros(1, dtype=complex)
        for dj in d[::-1]:
            out = P.polyadd(P.polymul(out, [-self.a / w, 1.0 / w]), [dj])
        return np.pad(out, (0, max(0, len(d) - len(out))))[: len(d)]

    def __neg__(self):
        return RealPolynomial(-self.coefficients, self.a, self.b, self.basis)

    def __sub__(self, other):
        if isinstance(other, GridFunction):
            return -_grid_minus_poly(other, self)
        return NotImplemented

    def as_pieces(self) -> "PiecewisePolynomial":
        return PiecewisePolynomial(np.array([self.a, self.b]), self.bernstein_coefficients()[None, :])

    def __repr__(self):
        return f"RealPolynomial(degree<={len(self.coefficients) - 1}, basis={self.basis}, [{self.a}, {self.b}])"


@dataclass(frozen=True, eq=False)
class PiecewisePolynomial:
    """Continuous-or-not piecewise polynomial; row ``k`` of ``coeffs`` holds the
    Bernstein coefficients of the piece on ``[breaks[k], breaks[k+1]]``."""

    breaks: np.ndarray
    coeffs: np.ndarray

    def __call__(self, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        k = np.clip(np.searchsorted(self.breaks, x, side="right") - 1, 0, len(self.breaks) - 2)
        t = (x - self.breaks[k]) / (self.breaks[k + 1] - self.breaks[k])
        return bz.de_casteljau(self.coeffs[k], t)

    def __neg__(self):
        return PiecewisePolynomial(self.breaks, -self.coeffs)


def _grid_minus_poly(f: GridFunction, p: RealPolynomial) -> PiecewisePolynomial:
    if (f.a, f.b) != (p.a, p.b):
        raise ValueError("function and polynomial live on different intervals")
    P = p.bernstein_coefficients()
    n = max(len(P) - 1, 1)
    P = bz.elevate(P[None, :], n)[0]
    w = f.b - f.a
    u = (f.nodes[:-1] - f.a) / w
    v = (f.nodes[1:] - f.a) / w
    v[-1] = 1.0
    rows = bz.restrict(np.broadcast_to(P, (len(u), n + 1)), u, v)
    lin = bz.elevate(np.stack([f.values[:-1], f.values[1:]], axis=1), n)
    return PiecewisePolynomial(np.array(f.nodes, dtype=float), lin - rows)


@norm.register
def _(p: PiecewisePolynomial, config: Config = DEFAULT_CONFIG) -> NormBound:
    return bz.max_modulus(p.coeffs, config.abs_tol, config.refine_max_iters)


@norm.register
def _(p: RealPolynomial, config: Config = DEFAULT_CONFIG) -> NormBound:
    return norm(p.as_pieces(), config)


def _poly_zero_bracket(p: RealPolynomial, samples: int = 2049):
    """Interval proved to contain a zero of ``p``, or None.

    Endpoint Bernstein coefficients are the endpoint values; for real
    polynomials a sign change between samples proves a zero in between.
    """
    C = p.bernstein_coefficients()
    if C[0] == 0:
        return p.a, p.a
    if C[-1] == 0:
        return p.b, p.b
    if np.any(C.imag != 0):
        return None
    x = np.linspace(p.a, p.b, samples)
    y = np.asarray(p(x)).real
    noise = 8 * len(C) * np.finfo(float).eps * float(np.abs(C).max())
    sig = np.where(y > noise, 1, np.where(y < -noise, -1, 0))
    idx = np.flatnonzero(sig != 0)
    for i, j in zip(idx[:-1], idx[1:]):
        if sig[i] != sig[j]:
            return float(x[i]), float(x[j])
    return None


@phi.register
def _(p: RealPolynomial, config: Config = DEFAULT_CONFIG) -> NormBound:
    if _poly_zero_bracket(p) is not None:
        return NormBound.exact(0.0)
    return bz.min_modulus(p.bernstein_coefficients()[None, :], config.abs_tol, config.refine_max_iters)


@classify.register
def _(p: RealPolynomial, config: Config = DEFAULT_CONFIG) -> Classification:
    zero_poly = not np.any(p.coefficients)
    if zero_poly:
        zd = Verdict.proved("the zero polynomial annihilates every element", cite=ZERO_DIVISOR_CITE)
    else:
        zd = Verdict.refuted("a nonzero polynomial has finitely many zeros", cite=ZERO_DIVISOR_CITE)
    bracket = _poly_zero_bracket(p)
    if zero_poly or bracket is not None:
        cert = {"bracket": list(bracket)} if bracket else None
        tdz = Verdict.proved("p has a zero in [a,b]", cert, TDZ_CITE)
        reg = Verdict.refuted("p has a zero in [a,b]", cert, REGULAR_CITE)
    else:
        try:
            m = phi(p, config)
        except Exception as exc:  # CertificationFailed
            m = getattr(exc, "bound", None) or NormBound(0.0, math.inf)
        if m.lo > 0:
            tdz = Verdict.refuted("certified min |p| > 0", {"min_modulus": m}, TDZ_CITE)
            reg = Verdict.proved("certified min |p| > 0", {"min_modulus": m}, REGULAR_CITE)
        else:
            tdz = Verdict.unknown("could not separate min |p| from 0", {"min_modulus": m})
            reg = Verdict.unknown("could not separate min |p| from 0", {"min_modulus": m})
    return unit_verdicts(reg, zd, tdz, cite_singular=(REGULAR_CITE,))


@lru_cache(maxsize=64)
def _binomials(n: int) -> np.ndarray:
    return comb(n, np.arange(n + 1))


def bernstein_approx(f: GridFunction, n: int) -> RealPolynomial:
    """Degree-``n`` Bernstein polynomial of ``f``, in Bernstein basis on [a, b]."""
    if n < 1:
        raise ValueError("Bernstein degree must be >= 1")
    x = f.a + (f.b - f.a) * np.arange(n + 1) / n
    x[-1] = f.b
    return RealPolynomial(f(x), f.a, f.b, basis="bernstein")


def bernstein_error(f: GridFunction, n: int, config: Config = DEFAULT_CONFIG) -> NormBound:
    return norm(f - bernstein_approx(f, n), config)


def vanishing_shift(p: RealPolynomial, c: float) -> RealPolynomial:
    """``q = p - p(c)``, so that ``q(c) = 0`` and ``||q - p|| = |p(c)|``."""
    if not p.a <= c <= p.b:
        raise ValueError("c must lie in [a, b]")
    pc = complex(p(c))
    if p.basis == "bernstein":
        # constants have all Bernstein coefficients equal
        return RealPolynomial(p.coefficients - pc, p.a, p.b, "bernstein")
    coeffs = np.array(p.coefficients)
    coeffs[0] -= pc
    return RealPolynomial(coeffs, p.a, p.b, "monomial")


def weierstrass_tdz_route(
    f: GridFunction, c: float, degrees: Sequence[int], config: Config = DEFAULT_CONFIG
) -> WitnessSequence:
    """Polynomials ``q_n`` vanishing at ``c`` with ``q_n -> f`` uniformly.

    Term ``k`` (1-based) uses ``degrees[k-1]``; its ``product_norm`` field is
    the certified bound ``||f - q_n|| <= ||f - B_n f|| + |B_n f(c)|``.
    Each ``q_n`` factors as ``(x - c) r_n(x)`` and is therefore a topological
    divisor of zero; closedness of that set passes the property to ``f``.
    """
    _check_zero(f, c)
    degrees = list(degrees)

    @lru_cache(maxsize=None)
    def gen(k: int) -> WitnessTerm:
        if k > len(degrees):
            raise IndexError(f"only {len(degrees)} degrees requested")
        n = degrees[k - 1]
        p = bernstein_approx(f, n)
        q = vanishing_shift(p, c)
        err = norm(f - p, config)
        shift = abs(complex(p(c)))
        cert = NormBound(max(err.lo - shift, 0.0), err.hi + shift)
        return WitnessTerm(n, q, None, cert)

    return WitnessSequence(
        f"Bernstein approximants shifted to vanish at {c:.12g}",
        gen,
        metadata={"degrees": degrees, "zero": c, "quantity": "approximation error ||f - q_n||"},
    )
