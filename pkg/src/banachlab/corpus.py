"""Curated elements of all three algebras, shared by the verify suites and tests."""
from __future__ import annotations

import cmath
import math

import numpy as np

from .disk import BlaschkeProduct, ComplexPolynomial, DiskElement
from .interval import GridFunction
from .sequence import BoundedSequence, Constant, ReciprocalDecay, Tail, Zero


def grid_corpus() -> dict:
    x = np.linspace(0.0, 1.0, 41)
    return {
        "one": GridFunction.constant(1.0, 0.0, 1.0),
        "x_minus_half": GridFunction(0.0, 1.0, [-0.5, 0.0, 0.5]),
        "abs_x_minus_half": GridFunction(0.0, 1.0, [0.5, 0.0, 0.5]),
        "x_on_unit": GridFunction(0.0, 1.0, [0.0, 1.0]),
        "flat_middle": GridFunction(0.0, 1.0, [1.0, 0.0, 0.0, -2.0], [0.0, 0.25, 0.5, 1.0]),
        "rotating": GridFunction(0.0, 1.0, 2.0 + np.exp(2j * np.pi * x)),
        "rotating_touching": GridFunction(0.0, 1.0, np.where(np.arange(41) == 20, 0, 1.0 + np.exp(2j * np.pi * x))),
        "parabola_shifted": GridFunction(-1.0, 1.0, np.linspace(-1, 1, 21) ** 2 + 0.1),
        "sign_change_off_grid": GridFunction(0.0, 3.0, [-1.0, -1.0, 2.0, 2.0]),
        "complex_cross": GridFunction(0.0, 1.0, [-1 - 1j, 1 + 1j]),
        "complex_miss": GridFunction(0.0, 1.0, [-1 + 0.5j, 1 + 0.5j]),
    }


def sequence_corpus() -> dict:
    """At least twenty bounded sequences covering every tail kind."""
    return {
        "zero_then_ones": BoundedSequence((0,), Constant(1)),
        "ones": BoundedSequence((), Constant(1)),
        "recip": BoundedSequence((), ReciprocalDecay(1)),
        "recip_complex": BoundedSequence((), ReciprocalDecay(2 - 1j)),
        "basis_3": BoundedSequence((0, 0, 1), Zero()),
        "finite_support": BoundedSequence((1, -2, 3j), Zero()),
        "zero": BoundedSequence((), Zero()),
        "const_i": BoundedSequence((), Constant(-1j)),
        "prefix_then_const": BoundedSequence((2, 4), Constant(2)),
        "prefix_zero_recip": BoundedSequence((5, 0, 1), ReciprocalDecay(3)),
        "small_prefix": BoundedSequence((1e-9, 1), Constant(1)),
        "affine_positive": BoundedSequence((), Tail(0.2, 1)),
        "affine_with_root": BoundedSequence((), Tail(1, -7)),
        "affine_no_integer_root": BoundedSequence((), Tail(1, -7.5)),
        "affine_complex": BoundedSequence((1,), Tail(1j, 1)),
        "alternating_prefix": BoundedSequence(tuple((-1) ** k for k in range(10)), Constant(0.5)),
        "decaying_prefix": BoundedSequence(tuple(1 / 2**k for k in range(20)), ReciprocalDecay(1e-3)),
        "long_prefix_then_zero": BoundedSequence(tuple(range(1, 30)), Zero()),
        "half_then_recip": BoundedSequence((0.5, 0.5), ReciprocalDecay(-1)),
        "neg_const_tail": BoundedSequence((3,), Constant(-0.25)),
        "prefix_zero_const": BoundedSequence((1, 1, 0, 1), Constant(1)),
        "tiny_const": BoundedSequence((), Constant(1e-300)),
    }


def disk_corpus() -> dict:
    def lf(z0):
        return DiskElement.linear_factor(z0)

    B = BlaschkeProduct((0.5, -0.3j), 1)
    return {
        "lf_1": lf(1),
        "lf_i": lf(1j),
        "lf_pi7": lf(cmath.exp(1j * math.pi / 7)),
        "lf_0": lf(0),
        "lf_half": lf(0.5),
        "lf_099": lf(0.99),
        "lf_101": lf(1.01),
        "lf_2": lf(2),
        "z_plus_3": DiskElement(ComplexPolynomial([3, 1])),
        "z_squared": DiskElement(ComplexPolynomial([0, 0, 1])),
        "blaschke": DiskElement(ComplexPolynomial([1]), B),
        "blaschke_times_lf_1": DiskElement(ComplexPolynomial([-0.5, 0.5]), B),
        "two_circle_roots": DiskElement(ComplexPolynomial([-1, 0, 1])),
        "zero": DiskElement(ComplexPolynomial([0])),
        "outside_roots": DiskElement(ComplexPolynomial([6, -5, 1])),
    }


def full_corpus() -> dict:
    out = {}
    for prefix, items in (("C", grid_corpus()), ("linf", sequence_corpus()), ("disk", disk_corpus())):
        for k, v in items.items():
            out[f"{prefix}/{k}"] = v
    return out


def random_blaschke(rng: np.random.Generator, max_zeros: int = 5, max_radius: float = 0.9) -> BlaschkeProduct:
    k = int(rng.integers(1, max_zeros + 1))
    r = max_radius * np.sqrt(rng.random(k))
    zeros = tuple(r * np.exp(2j * np.pi * rng.random(k)))
    gamma = complex(np.exp(2j * np.pi * rng.random()))
    return BlaschkeProduct(zeros, gamma)


def random_polynomial(rng: np.random.Generator, max_degree: int = 10) -> ComplexPolynomial:
    d = int(rng.integers(0, max_degree + 1))
    c = rng.standard_normal(d + 1) + 1j * rng.standard_normal(d + 1)
    return ComplexPolynomial(c)
