"""The algebra l-infinity of bounded complex sequences.

A :class:`BoundedSequence` is a finite explicit prefix followed by a symbolic
tail ``x_n = const + scale/n``.  That family covers constants, ``scale/n``
decay and the zero tail, is closed under addition, and keeps ``sup |x_n|``,
``inf |x_n|`` and the zero coordinates exactly computable.  Coordinates are
indexed from 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import numpy as np

from .core import (
    DEFAULT_CONFIG,
    Classification,
    Config,
    NormBound,
    NotATDZ,
    NotAZeroDivisor,
    NotRegular,
    NotRepresentable,
    Verdict,
    WitnessSequence,
    WitnessTerm,
    classify,
    is_unit,
    norm,
    phi,
    unit_verdicts,
)

REGULAR_CITE = "l-infinity: x is invertible iff x is bounded away from zero"
ZERO_DIVISOR_CITE = "l-infinity: x is a zero divisor iff some coordinate x_n vanishes"
TDZ_CITE = "l-infinity: the topological divisors of zero are exactly the singular elements"
C00_CITE = "c00 (finitely supported sequences) is a proper subset of the zero divisors of l-infinity"
C0_CITE = "c0 (null sequences) is a proper subset of the topological divisors of zero of l-infinity"


@dataclass(frozen=True)
class Tail:
    """Coordinates ``const + scale/n`` for every index ``n`` past the prefix."""

    const: complex = 0j
    scale: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "const", complex(self.const))
        object.__setattr__(self, "scale", complex(self.scale))
        if not (np.isfinite(self.const) and np.isfinite(self.scale)):
            raise ValueError("tail parameters must be finite")

    @property
    def kind(self) -> str:
        if self.scale == 0:
            return "zero" if self.const == 0 else "const"
        return "recip" if self.const == 0 else "affine"

    def value(self, n):
        return self.const + self.scale / n

    def __add__(self, other: "Tail") -> "Tail":
        return Tail(self.const + other.const, self.scale + other.scale)

    def __neg__(self) -> "Tail":
        return Tail(-self.const, -self.scale)

    def __mul__(self, other: "Tail") -> "Tail":
        if self.scale != 0 and other.scale != 0:
            raise NotRepresentable("product of two decaying tails decays like 1/n^2")
        return Tail(self.const * other.const, self.const * other.scale + other.const * self.scale)


def Zero() -> Tail:
    return Tail()


def Constant(c) -> Tail:
    return Tail(const=c)


def ReciprocalDecay(scale) -> Tail:
    return Tail(scale=scale)


@dataclass(frozen=True)
class BoundedSequence:
    prefix: tuple = ()
    tail: Tail = Tail()

    def __post_init__(self):
        prefix = tuple(complex(v) for v in self.prefix)
        if not all(np.isfinite(v) for v in prefix):
            raise ValueError("prefix entries must be finite")
        object.__setattr__(self, "prefix", prefix)

    @property
    def m(self) -> int:
        return len(self.prefix)

    def coordinate(self, n: int) -> complex:
        if n < 1:
            raise IndexError("coordinates are indexed from 1")
        if n <= self.m:
            return self.prefix[n - 1]
        return self.tail.value(n)

    def coordinates(self, count: int) -> np.ndarray:
        """The first ``count`` coordinates as an array."""
        out = np.empty(count, dtype=complex)
        k = min(count, self.m)
        out[:k] = self.prefix[:k]
        if count > k:
            n = np.arange(k + 1, count + 1, dtype=float)
            out[k:] = self.tail.const + self.tail.scale / n
        return out

    def _padded(self, length: int) -> tuple:
        return tuple(self.coordinates(length)) if length > self.m else self.prefix

    def __add__(self, other):
        if isinstance(other, BoundedSequence):
            L = max(self.m, other.m)
            pre = tuple(u + v for u, v in zip(self._padded(L), other._padded(L)))
            return BoundedSequence(pre, self.tail + other.tail)
        if np.isscalar(other):
            return self + BoundedSequence((), Constant(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return BoundedSequence(tuple(-v for v in self.prefix), -self.tail)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BoundedSequence):
            L = max(self.m, other.m)
            pre = tuple(u * v for u, v in zip(self._padded(L), other._padded(L)))
            return BoundedSequence(pre, self.tail * other.tail)
        if np.isscalar(other):
            return self * BoundedSequence((), Constant(other))
        return NotImplemented

    __rmul__ = __mul__


def basis_vector(k: int) -> BoundedSequence:
    """``e_k``: 1 in coordinate ``k``, 0 elsewhere."""
    if k < 1:
        raise ValueError("basis vectors are indexed from 1")
    return BoundedSequence((0,) * (k - 1) + (1,), Zero())


def _exact_parts(z: complex):
    return Fraction(z.real), Fraction(z.imag)


def tail_modulus(t: Tail, n: int) -> float:
    """``|c + s/n|`` with the cancellation done in exact rational arithmetic."""
    cr, ci = _exact_parts(t.const)
    sr, si = _exact_parts(t.scale)
    return math.hypot(float(cr + sr / n), float(ci + si / n))


def _tail_sup(x: BoundedSequence) -> float:
    t = x.tail
    return max(tail_modulus(t, x.m + 1), abs(t.const))


def _tail_inf(x: BoundedSequence) -> float:
    t = x.tail
    if t.scale == 0:
        return abs(t.const)
    if t.const == 0:
        return 0.0
    # |c + s u|^2 is convex in u = 1/n; check the integers around its vertex
    cr, ci = _exact_parts(t.const)
    sr, si = _exact_parts(t.scale)
    ustar = -(cr * sr + ci * si) / (sr * sr + si * si)
    best = abs(t.const)
    candidates = {x.m + 1}
    if ustar > 0:
        nstar = 1 / ustar
        candidates |= {math.floor(nstar), math.ceil(nstar)}
    for n in candidates:
        if n > x.m:
            best = min(best, tail_modulus(t, n))
    return best


def norms(x: BoundedSequence):
    """Exact ``(sup |x_n|, inf |x_n|)`` as zero-width enclosures."""
    pre = [abs(v) for v in x.prefix]
    sup = max(pre + [_tail_sup(x)])
    inf = min(pre + [_tail_inf(x)])
    return NormBound.exact(sup), NormBound.exact(inf)


def _tail_root(t: Tail) -> Optional[int]:
    """The integer ``n`` with ``c + s/n = 0``, if there is one."""
    cr, ci = _exact_parts(t.const)
    sr, si = _exact_parts(t.scale)
    den = cr * cr + ci * ci
    if den == 0:
        return None
    # n = -s/c
    re = -(sr * cr + si * ci) / den
    im = -(si * cr - sr * ci) / den
    if im != 0 or re.denominator != 1 or re < 1:
        return None
    return int(re)


def zero_indices(x: BoundedSequence) -> Iterator[int]:
    """Indices ``n`` with ``x_n = 0`` in increasing order (possibly infinite)."""
    for n, v in enumerate(x.prefix, start=1):
        if v == 0:
            yield n
    t = x.tail
    if t.kind == "zero":
        n = x.m + 1
        while True:
            yield n
            n += 1
    elif t.kind == "affine":
        n = _tail_root(t)
        if n is not None and n > x.m:
            yield n


def first_zero(x: BoundedSequence) -> Optional[int]:
    return next(zero_indices(x), None)


@norm.register
def _(x: BoundedSequence, config: Config = DEFAULT_CONFIG) -> NormBound:
    return norms(x)[0]


@phi.register
def _(x: BoundedSequence, config: Config = DEFAULT_CONFIG) -> NormBound:
    # ||x e_n|| = |x_n|, and ||x y|| >= inf|x_n| ||y||
    return norms(x)[1]


@is_unit.register
def _(x: BoundedSequence) -> bool:
    return all(v == 1 for v in x.prefix) and x.tail == Tail(1, 0)


def _classify_sequence(x: BoundedSequence, config: Config = DEFAULT_CONFIG) -> Classification:
    _, inf = norms(x)
    z = first_zero(x)
    if z is None:
        zd = Verdict.refuted("no coordinate vanishes", {"tail": x.tail.kind}, ZERO_DIVISOR_CITE)
    else:
        zd = Verdict.proved(f"x_{z} = 0", {"index": z}, ZERO_DIVISOR_CITE)
    if inf.lo > 0:
        reg = Verdict.proved("bounded away from zero", {"inf": inf.lo}, REGULAR_CITE)
        tdz = Verdict.refuted("bounded away from zero, hence regular", {"inf": inf.lo}, TDZ_CITE)
    else:
        reg = Verdict.refuted("inf |x_n| = 0", {"inf": 0.0}, REGULAR_CITE)
        tdz = Verdict.proved("singular, and singular elements are topological divisors of zero", {"inf": 0.0}, TDZ_CITE)
    return unit_verdicts(reg, zd, tdz, cite_singular=(REGULAR_CITE,))


classify.register(BoundedSequence, _classify_sequence)


def inverse(x: BoundedSequence) -> BoundedSequence:
    """Coordinate-wise reciprocal of a regular element."""
    _, inf = norms(x)
    if inf.lo == 0:
        raise NotRegular("inf |x_n| = 0; the reciprocal sequence is unbounded")
    if x.tail.kind == "affine":
        raise NotRepresentable("1/(c + s/n) is not of the form c' + s'/n")
    return BoundedSequence(tuple(1 / v for v in x.prefix), Constant(1 / x.tail.const))


def zero_divisor_witness(x: BoundedSequence) -> BoundedSequence:
    """``e_n`` at the first vanishing coordinate, so that ``x e_n = 0``."""
    z = first_zero(x)
    if z is None:
        raise NotAZeroDivisor("no coordinate of x vanishes")
    return basis_vector(z)


def tdz_witness_index(x: BoundedSequence, k: int) -> int:
    if k < 1:
        raise ValueError("k must be a positive integer")
    _, inf = norms(x)
    if inf.lo > 0:
        raise NotATDZ("x is bounded away from zero")
    last = None
    for i, n in enumerate(zero_indices(x), start=1):
        last = n
        if i == k:
            return n
    if last is not None:
        # finitely many zeros: keep annihilating with the last one
        return last
    # inf = 0 without a vanishing coordinate: only a decaying tail does that
    return x.m + k


def tdz_witness(x: BoundedSequence, k: int):
    """``(e_{n_k}, ||x e_{n_k}||)`` with ``|x_{n_k}| -> 0``.

    Zero coordinates are used first (exact annihilation); otherwise the
    indices run through the decaying tail, giving non-increasing norms.
    """
    n = tdz_witness_index(x, k)
    mod = abs(x.prefix[n - 1]) if n <= x.m else tail_modulus(x.tail, n)
    return basis_vector(n), NormBound.exact(mod)


def tdz_witness_sequence(x: BoundedSequence) -> WitnessSequence:
    _, inf = norms(x)
    if inf.lo > 0:
        raise NotATDZ("x is bounded away from zero")

    def gen(k):
        e, prod = tdz_witness(x, k)
        return WitnessTerm(k, e, NormBound.exact(1.0), prod)

    return WitnessSequence("basis vectors along a subsequence with |x_n| -> 0", gen)


def space_membership(x: BoundedSequence) -> dict:
    """Membership of ``x`` in c0 and c00, with the relevant inclusion cited."""
    t = x.tail
    if t.const == 0:
        in_c0 = Verdict.proved("tail tends to 0", {"tail": t.kind}, C0_CITE)
    else:
        in_c0 = Verdict.refuted(f"tail tends to {t.const}", {"limit_modulus": abs(t.const)}, C0_CITE)
    if t.kind == "zero":
        in_c00 = Verdict.proved("tail vanishes identically", {"support_bound": x.m}, C00_CITE)
    else:
        in_c00 = Verdict.refuted("infinitely many nonzero coordinates", {"tail": t.kind}, C00_CITE)
    return {"in_c0": in_c0, "in_c00": in_c00}
