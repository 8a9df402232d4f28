import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from duomic.combiner import combine, post_filter
from duomic.config import CombinerParams
from duomic.errors import ConfigMismatchError, ParameterError

N = 161


def gains(seed):
    return np.random.default_rng(seed).uniform(0, 1, N)


def test_endpoints_bit_for_bit():
    gk, gcoh = gains(0), gains(1)
    np.testing.assert_array_equal(combine(gk, gcoh, CombinerParams(), 1.0), gk)
    np.testing.assert_array_equal(combine(gk, gcoh, CombinerParams(), 0.0), gcoh)


def test_default_weight_spot_value():
    gk = np.full(N, 0.4)
    gcoh = np.full(N, 0.9)
    out = combine(gk, gcoh, CombinerParams(weight=0.7))
    np.testing.assert_allclose(out, 0.55)


def test_weight_out_of_range_rejected():
    with pytest.raises(ParameterError):
        combine(gains(0), gains(1), CombinerParams(), 1.5)
    with pytest.raises(ConfigMismatchError):
        combine(gains(0), np.ones(5), CombinerParams())


@settings(max_examples=100, deadline=None)
@given(w1=st.floats(0, 1), w2=st.floats(0, 1), a=st.floats(0, 1),
       seed=st.integers(0, 50))
def test_affine_in_weight(w1, w2, a, seed):
    gk, gcoh = gains(seed), gains(seed + 100)
    p = CombinerParams()
    mixed = combine(gk, gcoh, p, a * w1 + (1 - a) * w2)
    parts = a * combine(gk, gcoh, p, w1) + (1 - a) * combine(gk, gcoh, p, w2)
    np.testing.assert_allclose(mixed, parts, atol=1e-15, rtol=0)


def test_monotone_steering():
    gk = np.full(N, 0.8)
    gcoh = np.full(N, 0.2)
    p = CombinerParams()
    outs = [combine(gk, gcoh, p, w)[0] for w in np.linspace(0, 1, 11)]
    assert np.all(np.diff(outs) > 0)


class TestPostFilter:
    def test_no_smoothing_passthrough(self):
        p = CombinerParams(smooth_t=0.0, g_min=0.1)
        g = np.linspace(0.1, 1.0, N)
        np.testing.assert_array_equal(post_filter(g, np.ones(N), p), g)

    def test_zero_gain_floors(self):
        p = CombinerParams()
        out = post_filter(np.zeros(N), np.zeros(N), p)
        np.testing.assert_allclose(out, p.g_min)

    def test_smoothing_recursion(self):
        p = CombinerParams(smooth_t=0.6, g_min=0.1)
        out = post_filter(np.zeros(N), np.ones(N), p)
        np.testing.assert_allclose(out, 0.6)

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 100), smooth=st.floats(0, 0.99),
           g_min=st.floats(0, 0.5))
    def test_bounds(self, seed, smooth, g_min):
        p = CombinerParams(smooth_t=smooth, g_min=g_min)
        out = post_filter(gains(seed), gains(seed + 7), p)
        assert np.all(out >= p.g_min - 1e-15)
        assert np.all(out <= 1.0)
