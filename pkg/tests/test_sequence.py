import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from banachlab import sequence as sq
from banachlab.core import NotATDZ, NotAZeroDivisor, NotRegular, NotRepresentable, NormBound, classify, is_unit, norm, phi
from banachlab.sequence import BoundedSequence, Constant, ReciprocalDecay, Tail, Zero

small = st.floats(-5, 5, allow_subnormal=False)
tails = st.one_of(
    st.builds(Constant, small),
    st.builds(ReciprocalDecay, small),
    st.just(Zero()),
    # affine tails whose zero crossing, if any, falls inside the scanned range
    st.builds(Tail, small.filter(lambda c: abs(c) > 1e-3), small),
)
seqs = st.builds(lambda p, t: BoundedSequence(tuple(p), t), st.lists(small, max_size=12), tails)

SCAN = 200_000


def scan_inf_sup(x):
    """Brute-force scan plus the tail limit: an oracle independent of norms()."""
    a = np.abs(x.coordinates(SCAN))
    return min(a.min(), abs(x.tail.const)), max(a.max(), abs(x.tail.const))


class TestNorms:
    def test_examples(self):
        assert sq.norms(BoundedSequence((0, 1), Constant(1))) == (NormBound.exact(1), NormBound.exact(0))
        assert sq.norms(BoundedSequence((), ReciprocalDecay(1))) == (NormBound.exact(1), NormBound.exact(0))
        assert sq.norms(BoundedSequence((), Zero())) == (NormBound.exact(0), NormBound.exact(0))

    def test_affine_minimum_inside_tail(self):
        # |1 - 7.5/n| is smallest at n = 7 or 8
        x = BoundedSequence((), Tail(1, -7.5))
        assert phi(x).hi == pytest.approx(min(abs(1 - 7.5 / 7), abs(1 - 7.5 / 8)))

    @given(seqs)
    def test_against_scan(self, x):
        sup, inf = sq.norms(x)
        lo, hi = scan_inf_sup(x)
        assert sup.hi == pytest.approx(hi, rel=1e-12, abs=1e-300)
        # the scan can only miss the inf when it is the tail limit
        assert inf.hi == pytest.approx(lo, rel=1e-12, abs=1e-300)


def test_far_zero_crossing_is_exact():
    # c + s/n crosses zero near n = 6.2e127; floats cancel to 0 there, the true inf is positive
    c, s = -1.603047358581905e-128, 1.0
    x = BoundedSequence((), Tail(c, s))
    nstar = Fraction(-1) / Fraction(c)
    oracle = min(abs(Fraction(c) + Fraction(s) / n) for n in (math.floor(nstar), math.ceil(nstar)))
    assert phi(x).hi == float(oracle) and phi(x).hi > 0
    assert classify(x).regular.is_proved


def test_huge_float_root_is_not_integer():
    x = BoundedSequence((), Tail(-2.871037095066975e-242, 1.0859247913965702e-70))
    c = classify(x)
    assert c.zero_divisor.is_refuted and not c.coherence_violations()


def test_huge_exact_root():
    x = BoundedSequence((), Tail(2.0**-60, -1.0))
    assert sq.first_zero(x) == 2**60
    assert classify(x).zero_divisor.is_proved


class TestClassify:
    def test_examples(self):
        c = classify(BoundedSequence((0,), Constant(1)))
        assert c.zero_divisor.is_proved and c.topological_divisor.is_proved
        c = classify(BoundedSequence((), ReciprocalDecay(1)))
        assert c.topological_divisor.is_proved and c.zero_divisor.is_refuted and c.singular.is_proved
        assert classify(BoundedSequence((2,), Constant(1))).regular.is_proved

    @given(seqs)
    def test_tdz_equals_singular(self, x):
        c = classify(x)
        assert c.topological_divisor.status == c.singular.status
        assert not c.has_unknown() and not c.coherence_violations()
        assert phi(x).is_zero() == c.topological_divisor.is_proved


class TestInverse:
    def test_examples(self):
        y = sq.inverse(BoundedSequence((2,), Constant(1)))
        assert y.prefix == (0.5,) and y.tail == Constant(1)
        assert sq.inverse(BoundedSequence((), Constant(-1j))).tail == Constant(1j)
        x = BoundedSequence((2, 4), Constant(2))
        y = sq.inverse(x)
        assert y.prefix == (0.5, 0.25) and y.tail == Constant(0.5)
        assert np.all(x.coordinates(10_000) * y.coordinates(10_000) == 1)

    def test_errors(self):
        with pytest.raises(NotRegular):
            sq.inverse(BoundedSequence((), ReciprocalDecay(1)))
        with pytest.raises(NotRepresentable):
            sq.inverse(BoundedSequence((), Tail(1, 0.5)))

    @given(st.lists(st.floats(0.1, 5) | st.floats(-5, -0.1), max_size=10), st.floats(0.1, 5))
    def test_product_is_one(self, pre, c):
        x = BoundedSequence(tuple(pre), Constant(c))
        y = sq.inverse(x)
        assert np.allclose(x.coordinates(1000) * y.coordinates(1000), 1, atol=1e-14)
        assert is_unit(BoundedSequence((), x.tail * y.tail)) or abs((x.tail * y.tail).const - 1) < 1e-15


class TestWitnesses:
    def test_zero_divisor_examples(self):
        assert sq.zero_divisor_witness(BoundedSequence((0,), Constant(1))) == sq.basis_vector(1)
        assert sq.zero_divisor_witness(BoundedSequence((1, 0, 3), Constant(1))) == sq.basis_vector(2)
        assert sq.zero_divisor_witness(BoundedSequence((), Zero())) == sq.basis_vector(1)
        with pytest.raises(NotAZeroDivisor):
            sq.zero_divisor_witness(BoundedSequence((), Constant(1)))

    def test_tdz_examples(self):
        e, p = sq.tdz_witness(BoundedSequence((), ReciprocalDecay(1)), 5)
        assert e == sq.basis_vector(5) and p == NormBound.exact(0.2)
        e, p = sq.tdz_witness(BoundedSequence((0,), Constant(1)), 1)
        assert e == sq.basis_vector(1) and p.is_zero()
        assert all(sq.tdz_witness(BoundedSequence((), Zero()), k)[1].is_zero() for k in (1, 4, 9))
        with pytest.raises(NotATDZ):
            sq.tdz_witness(BoundedSequence((), Constant(2)), 1)

    def test_affine_root_in_tail(self):
        x = BoundedSequence((), Tail(1, -7))
        assert sq.first_zero(x) == 7
        assert classify(x).zero_divisor.is_proved

    def test_product_is_coordinate(self):
        x = BoundedSequence((3, -1), ReciprocalDecay(2j))
        for k in (1, 2, 10):
            e, p = sq.tdz_witness(x, k)
            assert norm(x * e) == p

    @given(st.lists(small, max_size=6), small.filter(lambda s: s != 0))
    def test_recip_tail_monotone(self, pre, s):
        x = BoundedSequence(tuple(pre), ReciprocalDecay(s))
        p = [sq.tdz_witness(x, k)[1].hi for k in range(1, 60)]
        assert all(b <= a for a, b in zip(p, p[1:]))


class TestMembership:
    def test_examples(self):
        m = sq.space_membership(BoundedSequence((0,), Constant(1)))
        assert m["in_c0"].is_refuted and m["in_c00"].is_refuted
        m = sq.space_membership(BoundedSequence((), ReciprocalDecay(1)))
        assert m["in_c0"].is_proved and m["in_c00"].is_refuted
        assert sq.space_membership(BoundedSequence((5, 3), Zero()))["in_c00"].is_proved

    @given(seqs)
    def test_inclusions(self, x):
        m = sq.space_membership(x)
        c = classify(x)
        if m["in_c0"].is_proved:
            assert c.topological_divisor.is_proved
        if m["in_c00"].is_proved:
            assert c.zero_divisor.is_proved


class TestArithmetic:
    def test_decaying_product_not_representable(self):
        r = BoundedSequence((), ReciprocalDecay(1))
        with pytest.raises(NotRepresentable):
            r * r

    @given(seqs, seqs)
    def test_sum_coordinates(self, x, y):
        s = x + y
        assert np.allclose(s.coordinates(50), x.coordinates(50) + y.coordinates(50), atol=1e-12)
