"""Bernstein-basis arithmetic and certified range enclosures.

Rows of a 2-D coefficient array are independent polynomials on their own
parameter interval ``[0, 1]``; every routine is vectorized over rows.  Range
bounds rely on the convex-hull property: on ``[0, 1]`` the polynomial takes
values in the convex hull of its control coefficients.
"""
from __future__ import annotations

import numpy as np
from scipy.special import comb

from .core import CertificationFailed, NormBound

_EPS = np.finfo(float).eps


def de_casteljau(C: np.ndarray, t) -> np.ndarray:
    """Evaluate each row of ``C`` at ``t`` (scalar, or one value per row)."""
    work = np.array(C, dtype=complex, copy=True)
    t = np.asarray(t, dtype=float)
    if t.ndim == 1:
        t = t[:, None]
    while work.shape[-1] > 1:
        work = (1.0 - t) * work[..., :-1] + t * work[..., 1:]
    return work[..., 0]


def split(C: np.ndarray, t=0.5):
    """Subdivide each row at ``t``; returns coefficient arrays of both halves."""
    C = np.atleast_2d(np.asarray(C, dtype=complex))
    n = C.shape[1] - 1
    t = np.asarray(t, dtype=float)
    if t.ndim == 1:
        t = t[:, None]
    left = np.empty_like(C)
    right = np.empty_like(C)
    work = C.copy()
    left[:, 0] = work[:, 0]
    right[:, n] = work[:, n]
    for r in range(1, n + 1):
        work = (1.0 - t) * work[:, :-1] + t * work[:, 1:]
        left[:, r] = work[:, 0]
        right[:, n - r] = work[:, -1]
    return left, right


def restrict(C: np.ndarray, u, v) -> np.ndarray:
    """Coefficients of each row reparametrized from ``[u, v]`` onto ``[0, 1]``."""
    u = np.broadcast_to(np.asarray(u, dtype=float), (np.atleast_2d(C).shape[0],))
    v = np.broadcast_to(np.asarray(v, dtype=float), u.shape)
    _, right = split(C, u)
    denom = np.where(u < 1.0, 1.0 - u, 1.0)
    left, _ = split(right, np.clip((v - u) / denom, 0.0, 1.0))
    return left


def elevate(C: np.ndarray, degree: int) -> np.ndarray:
    """Raise the degree of each row to ``degree`` without changing the polynomial."""
    C = np.atleast_2d(np.asarray(C, dtype=complex))
    n = C.shape[1] - 1
    if degree < n:
        raise ValueError("cannot lower the degree")
    while n < degree:
        k = np.arange(1, n + 1) / (n + 1)
        new = np.empty((C.shape[0], n + 2), dtype=complex)
        new[:, 0] = C[:, 0]
        new[:, -1] = C[:, -1]
        new[:, 1:-1] = k * C[:, :-1] + (1 - k) * C[:, 1:]
        C = new
        n += 1
    return C


def from_power(d: np.ndarray) -> np.ndarray:
    """Bernstein coefficients on [0, 1] of ``sum_j d[j] t**j``."""
    d = np.asarray(d, dtype=complex)
    n = len(d) - 1
    b = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        j = np.arange(k + 1)
        b[k] = np.sum(comb(k, j) / comb(n, j) * d[: k + 1])
    return b


def to_power(b: np.ndarray) -> np.ndarray:
    """Power coefficients in ``t`` of a Bernstein polynomial on [0, 1]."""
    b = np.asarray(b, dtype=complex)
    n = len(b) - 1
    d = np.zeros(n + 1, dtype=complex)
    for j in range(n + 1):
        k = np.arange(j + 1)
        d[j] = comb(n, j) * np.sum((-1.0) ** (j - k) * comb(j, k) * b[: j + 1])
    return d


def _rounding_pad(C: np.ndarray) -> float:
    if C.size == 0:
        return 0.0
    return 4.0 * C.shape[1] * _EPS * float(np.max(np.abs(C)))


def max_modulus(C: np.ndarray, tol: float, max_iters: int) -> NormBound:
    """Certified enclosure of ``max |p|`` over all rows of ``C``.

    Branch and bound: pieces whose hull bound cannot beat the best sampled
    value by more than ``tol`` are discarded; the rest are bisected.
    """
    C = np.atleast_2d(np.asarray(C, dtype=complex))
    pad = _rounding_pad(C)
    best = float(max(np.abs(C[:, 0]).max(), np.abs(C[:, -1]).max()))
    pruned_hi = best
    for _ in range(max_iters):
        upper = np.abs(C).max(axis=1) + pad
        keep = upper > best - pad + tol
        if (~keep).any():
            pruned_hi = max(pruned_hi, float(upper[~keep].max()))
        if not keep.any():
            return NormBound(best - pad, max(pruned_hi, best))
        left, right = split(C[keep])
        best = max(best, float(np.abs(right[:, 0]).max()))
        C = np.concatenate([left, right])
    raise CertificationFailed(
        f"sup-norm enclosure did not reach width {tol:g} in {max_iters} refinements",
        NormBound(best - pad, float(np.abs(C).max()) + pad),
    )


def min_modulus(C: np.ndarray, tol: float, max_iters: int) -> NormBound:
    """Certified enclosure of ``min |p|`` over all rows of ``C``.

    The lower bound on a piece projects the control points onto the direction
    of the piece's midpoint value: ``|p| >= min_j Re(conj(u) * c_j)``.
    """
    C = np.atleast_2d(np.asarray(C, dtype=complex))
    pad = _rounding_pad(C)
    best = float(min(np.abs(C[:, 0]).min(), np.abs(C[:, -1]).min()))
    pruned_lo = best
    for _ in range(max_iters):
        if best <= pad:
            # a sampled value is already within rounding of zero
            return NormBound(0.0, best + pad)
        centre = de_casteljau(C, 0.5)
        best = min(best, float(np.abs(centre).min()))
        u = np.exp(1j * np.angle(centre))
        lower = np.maximum((np.conj(u)[:, None] * C).real.min(axis=1), 0.0) - pad
        keep = lower < best + pad - tol
        if (~keep).any():
            pruned_lo = min(pruned_lo, float(lower[~keep].min()))
        if not keep.any():
            return NormBound(max(min(pruned_lo, best), 0.0), best + pad)
        left, right = split(C[keep])
        C = np.concatenate([left, right])
    raise CertificationFailed(
        f"inf-modulus enclosure did not reach width {tol:g} in {max_iters} refinements",
        NormBound(0.0, best + pad),
    )
