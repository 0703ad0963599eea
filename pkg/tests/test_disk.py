import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from banachlab import disk
from banachlab.core import (
    CertificationFailed,
    Config,
    NotATDZ,
    NotUnimodular,
    NormBound,
    OutsideDomain,
    classify,
    norm,
    phi,
)
from banachlab.disk import BlaschkeProduct, ComplexPolynomial, DiskElement

coeffs = st.lists(st.complex_numbers(max_magnitude=3, allow_subnormal=False), min_size=1, max_size=8)
inner = st.builds(lambda r, t: r * cmath.exp(1j * t), st.floats(0, 0.9), st.floats(0, 2 * math.pi))


def circle_oracle(f, n=1 << 16):
    z = np.exp(2j * np.pi * np.arange(n) / n)
    return np.abs(disk.evaluate(f, z))


class TestEvaluate:
    def test_examples(self):
        assert disk.evaluate(DiskElement(ComplexPolynomial([1]), BlaschkeProduct((0,))), 1j) == pytest.approx(1j)
        assert disk.evaluate(DiskElement.linear_factor(1), 1) == 0
        assert disk.evaluate(DiskElement(ComplexPolynomial([1]), BlaschkeProduct((0.5,))), 1) == pytest.approx(1)

    def test_outside(self):
        with pytest.raises(OutsideDomain):
            disk.evaluate(DiskElement.linear_factor(1), 1.1)

    def test_blaschke_validation(self):
        with pytest.raises(ValueError):
            BlaschkeProduct((1.0,))
        with pytest.raises(ValueError):
            BlaschkeProduct((0.5,), 2)


class TestSupNorm:
    def test_blaschke_is_one(self):
        b = norm(BlaschkeProduct((0.5, -0.3j, 0.8)))
        assert b.contains(1.0) and b.width <= 2e-9

    def test_monomial(self):
        assert norm(ComplexPolynomial([0, 0, 0, 0, 1])).contains(1.0)

    def test_linear_factor(self):
        assert norm(DiskElement.linear_factor(1)).contains(1.0)

    @given(coeffs, st.lists(inner, max_size=3))
    def test_encloses_sampling(self, c, zeros):
        f = DiskElement(ComplexPolynomial(c), BlaschkeProduct(tuple(zeros)) if zeros else None)
        b = norm(f)
        sampled = circle_oracle(f).max()
        assert b.hi >= sampled - 1e-12
        assert b.lo <= sampled + 1e-7 * max(1, b.hi)
        assert b.width <= 1e-8

    def test_budget(self):
        with pytest.raises(CertificationFailed):
            norm(DiskElement(ComplexPolynomial([1, 2, 3])), Config(abs_tol=1e-15, refine_max_iters=1))


class TestClassify:
    def test_zero_divisor_test(self):
        assert disk.zero_divisor_test(DiskElement(ComplexPolynomial([0]))).is_proved
        assert disk.zero_divisor_test(DiskElement(ComplexPolynomial([0, 1]))).is_refuted
        assert disk.zero_divisor_test(DiskElement(ComplexPolynomial([1]), BlaschkeProduct((0.2,)))).is_refuted

    def test_blaschke_singular_not_tdz(self):
        c = classify(DiskElement(ComplexPolynomial([1]), BlaschkeProduct((0.5,))))
        assert c.singular.is_proved and c.topological_divisor.is_refuted

    def test_regular(self):
        assert classify(DiskElement(ComplexPolynomial([3, 1]))).regular.is_proved
        assert classify(DiskElement(ComplexPolynomial([0, 0, 1]))).regular.is_refuted

    @given(coeffs)
    def test_coherent(self, c):
        f = DiskElement(ComplexPolynomial(c))
        cls = classify(f)
        assert not cls.coherence_violations()
        if not cls.topological_divisor.status.value == "Unknown":
            assert phi(f).is_zero() == cls.topological_divisor.is_proved


class TestBlaschkeChecks:
    def test_rotation(self):
        v = disk.blaschke_isometry_check(BlaschkeProduct((0,)), ComplexPolynomial([1, 1]))
        assert v.is_proved

    def test_zero_f(self):
        v = disk.blaschke_isometry_check(BlaschkeProduct((0.3,)), ComplexPolynomial([0]))
        assert v.is_proved and v.certificate["norm_f"].is_zero() and v.certificate["norm_Bf"].is_zero()

    @given(st.lists(inner, min_size=1, max_size=5), coeffs)
    def test_isometry_property(self, zeros, c):
        v = disk.blaschke_isometry_check(BlaschkeProduct(tuple(zeros)), ComplexPolynomial(c))
        assert v.is_proved and v.certificate["deviation"] <= 1e-8

    def test_non_tdz_examples(self):
        B = BlaschkeProduct((0,))
        one_plus_z = ComplexPolynomial([1, 1])
        trials = [ComplexPolynomial([1]), ComplexPolynomial([0, 1]), one_plus_z * ComplexPolynomial([0.5])]
        v = disk.blaschke_non_tdz_certificate(B, trials)
        assert v.is_proved and v.certificate["min_ratio"] >= 1 - 1e-9
        B = BlaschkeProduct((0.9j,))
        g = ComplexPolynomial([-0.9j, 1])
        g = g * ComplexPolynomial([1 / norm(g).mid])
        assert disk.blaschke_non_tdz_certificate(B, [g]).is_proved

    def test_unimodularity(self):
        assert disk.unimodularity_deviation(BlaschkeProduct((0.5, 0.7j, -0.2)), 2**16) <= 1e-10


class TestLinearFactor:
    def test_closed_form(self):
        assert disk.closed_form_witness_norm(1) == 0.5
        assert disk.closed_form_witness_norm(3) == pytest.approx(0.3247595264191645, abs=1e-15)
        assert disk.closed_form_witness_norm(10_000) < 0.01

    def test_closed_form_against_sampling(self):
        # |f f_n| = |sin s| cos^n s with s = t/2
        t = np.linspace(0, math.pi, 2_000_001)
        for n in (1, 3, 10):
            sampled = np.max(np.abs(np.sin(t / 2)) * np.abs(np.cos(t / 2)) ** n)
            assert sampled == pytest.approx(disk.closed_form_witness_norm(n), abs=1e-9)

    def test_witness(self):
        for z0 in (1, 1j, cmath.exp(1j * math.pi / 7)):
            for n in (1, 3, 8):
                fn, unit, prod = disk.linear_factor_witness(z0, n)
                assert unit.contains(1.0, slack=1e-12)
                assert prod.contains(disk.closed_form_witness_norm(n))

    def test_witness_refuses(self):
        with pytest.raises(NotUnimodular):
            disk.linear_factor_witness(0.5, 1)

    def test_classify_examples(self):
        assert disk.linear_factor_classify(1).topological_divisor.is_proved
        c = disk.linear_factor_classify(0)
        assert c.topological_divisor.is_refuted
        assert c.topological_divisor.certificate["circle_min"].contains(0.5, slack=1e-9)
        c = disk.linear_factor_classify(2)
        assert c.topological_divisor.is_refuted and c.regular.is_proved

    @given(st.floats(0, 3).filter(lambda r: abs(r - 1) > 1e-3), st.floats(0, 2 * math.pi))
    def test_dichotomy_min(self, r, t):
        c = disk.linear_factor_classify(r * cmath.exp(1j * t))
        m = c.topological_divisor.certificate["circle_min"]
        assert m.contains(abs(1 - r) / 2, slack=1e-9)

    def test_exact_regime(self):
        on, regime = disk.unit_modulus_regime(1j)
        assert on and regime == "exact"
        on, regime = disk.unit_modulus_regime(cmath.exp(1j * math.pi / 7))
        assert on

    def test_tdz_sequence_generic(self):
        f = DiskElement(ComplexPolynomial([-1, 0, 1]))
        w = disk.tdz_witness_sequence(f)
        p = [w(n).product_norm.hi for n in (1, 4, 16, 64)]
        assert all(b < a for a, b in zip(p, p[1:]))
        with pytest.raises(NotATDZ):
            disk.tdz_witness_sequence(DiskElement(ComplexPolynomial([3, 1])))


class TestPhi:
    def test_blaschke_phi_is_one(self):
        p = phi(DiskElement(ComplexPolynomial([1]), BlaschkeProduct((0.5, -0.3j))))
        assert p.contains(1.0) and p.lo > 0.99

    def test_enclosure_contains_known_value(self):
        # (z - z0)/2 with |z0| < 1 factors as a Blaschke factor times (1 - conj(z0) z)/2
        r = 0.5
        p = phi(DiskElement.linear_factor(r))
        assert p.lo <= (1 - r) / 2 <= p.hi
