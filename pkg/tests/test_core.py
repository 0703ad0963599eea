import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from banachlab import core, interval, sequence
from banachlab.core import (
    Classification,
    Config,
    NormBound,
    Status,
    UnsupportedAlgebra,
    Verdict,
    WitnessSequence,
    WitnessTerm,
    classify,
    norm,
    phi,
    phi_lipschitz_check,
    propagate_tdz_witness,
)


class TestNormBound:
    def test_rejects_inverted(self):
        with pytest.raises(ValueError):
            NormBound(2.0, 1.0)

    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            NormBound(float("nan"), 1.0)

    def test_negative_lo_clamps_to_zero(self):
        assert NormBound(-1e-17, 1.0).lo == 0.0

    def test_exact_and_width(self):
        b = NormBound.exact(0.25)
        assert b.width == 0 and b.mid == 0.25 and b.contains(0.25)

    def test_overlap_with_slack(self):
        assert not NormBound(0, 1).overlaps(NormBound(1.5, 2))
        assert NormBound(0, 1).overlaps(NormBound(1.5, 2), slack=0.5)

    def test_floats_not_numpy(self):
        b = NormBound(np.float64(0.1), np.float64(0.2))
        assert type(b.lo) is float and type(b.hi) is float

    @given(st.floats(0, 1e6), st.floats(0, 1e6), st.floats(0, 10))
    def test_scaled_preserves_order(self, a, b, k):
        lo, hi = sorted((a, b))
        s = NormBound(lo, hi).scaled(k)
        assert s.lo <= s.hi


class TestConfig:
    def test_defaults(self):
        c = Config()
        assert c.abs_tol == 1e-9 and c.circle_samples == 1024

    def test_round_trip(self):
        c = Config(abs_tol=1e-6, circle_samples=256)
        assert Config.from_dict(c.to_dict()) == c

    def test_unknown_key(self):
        with pytest.raises((TypeError, ValueError)):
            Config.from_dict({"nope": 1})

    @pytest.mark.parametrize("kw", [{"abs_tol": 0}, {"circle_samples": 0}, {"refine_max_iters": -1}])
    def test_invalid(self, kw):
        with pytest.raises(ValueError):
            Config(**kw)


class TestVerdict:
    def test_negation_swaps(self):
        v = Verdict.proved("x", cite="c")
        n = v.negated("not x")
        assert n.status is Status.REFUTED and n.citations == ("c",)

    def test_unknown_stays_unknown(self):
        assert Verdict.unknown("?").negated("?").status is Status.UNKNOWN

    def test_to_dict_is_json(self):
        v = Verdict.proved("r", {"b": NormBound(0, 1), "z": 1j, "x": np.float64(2.0)}, "c")
        d = json.loads(json.dumps(v.to_dict()))
        assert d["certificate"] == {"b": {"lo": 0.0, "hi": 1.0}, "z": {"re": 0.0, "im": 1.0}, "x": 2.0}


class TestClassification:
    def test_coherence_violation_detected(self):
        p, r = Verdict.proved("p"), Verdict.refuted("r")
        assert Classification(p, p, r, r).coherence_violations()
        assert Classification(r, r, p, r).coherence_violations()
        assert not Classification(r, r, p, p).coherence_violations()


class TestDispatch:
    def test_unsupported(self):
        for fn in (norm, phi, classify):
            with pytest.raises(UnsupportedAlgebra):
                fn(object())

    def test_phi_examples(self):
        x = interval.GridFunction(0, 1, [0.0, 1.0])
        assert phi(x).is_zero()
        assert phi(x + 1.0) == NormBound(1.0, 1.0)
        s = sequence.BoundedSequence((0.5,), sequence.Constant(1))
        assert phi(s) == NormBound(0.5, 0.5)


class TestWitnessSequence:
    def test_index_starts_at_one(self):
        w = WitnessSequence("w", lambda n: WitnessTerm(n, None, NormBound.exact(1), NormBound.exact(1 / n)))
        with pytest.raises(ValueError):
            w(0)
        assert [t.index for t in w.terms(range(1, 4))] == [1, 2, 3]


class TestPropagation:
    f = interval.GridFunction(0.0, 1.0, [-0.5, 0.0, 0.5])

    def test_bound_scales_with_norm_of_multiplier(self):
        y = interval.GridFunction(0.0, 1.0, [2.0, -1.0, 0.5, 2.0])
        w = propagate_tdz_witness(interval.bump_witness_sequence(self.f), y)
        for n in (1, 3, 10, 100):
            term = w(n)
            assert term.product_norm.hi <= 2 / (4 * n) + 1e-15
            # grid oracle for ||y f g_n||
            x = np.linspace(0, 1, 200_001)
            actual = np.max(np.abs(y(x) * self.f(x) * term.element(x)))
            assert actual <= term.product_norm.hi + 1e-12

    def test_unit_multiplier_is_identity(self):
        w = interval.bump_witness_sequence(self.f)
        pw = propagate_tdz_witness(w, interval.GridFunction.constant(1.0))
        assert all(pw(n).product_norm == w(n).product_norm for n in (1, 7, 50))

    def test_zero_multiplier_annihilates(self):
        w = interval.bump_witness_sequence(self.f)
        pw = propagate_tdz_witness(w, interval.GridFunction.constant(0.0))
        assert all(pw(n).product_norm.is_zero() for n in (1, 7, 50))


class TestLipschitz:
    def test_examples(self):
        x = interval.GridFunction(0, 1, [0.0, 1.0])
        assert phi_lipschitz_check(x, interval.GridFunction.constant(0.1)).is_proved
        assert phi_lipschitz_check(x, interval.GridFunction.constant(0.0)).is_proved
        r = sequence.BoundedSequence((), sequence.ReciprocalDecay(1))
        v = phi_lipschitz_check(r, sequence.BoundedSequence((), sequence.Constant(0.2)))
        assert v.is_proved
        assert v.certificate["phi_f_plus_h"] == NormBound(0.2, 0.2)

    @given(
        st.lists(st.floats(-5, 5), min_size=2, max_size=12),
        st.lists(st.floats(-1, 1), min_size=2, max_size=12),
    )
    def test_grid_property(self, fv, hv):
        n = min(len(fv), len(hv))
        f = interval.GridFunction(0, 1, fv[:n])
        h = interval.GridFunction(0, 1, hv[:n])
        assert phi_lipschitz_check(f, h).is_proved


def test_propagation_cite_mentions_multiples():
    assert "multiple" in core.PROPAGATION_CITE
