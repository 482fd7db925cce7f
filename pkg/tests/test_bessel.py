"""K1 implementation against quadrature of its integral representation."""

import math

import numpy as np
import pytest

from coopnoma import bessel_k1, bessel_k1e, k1_quadrature
from coopnoma.analytic import k1e_scaled_quadrature

# frozen from adaptive quadrature of int_0^inf exp(-x cosh t) cosh t dt
QUADRATURE_PINS = {
    1e-3: 9.999962381560856e+02,
    0.5: 1.656441120003301e+00,
    1.0: 6.019072301972346e-01,
    2.0: 1.398658818165224e-01,
    10.0: 1.864877345382559e-05,
    50.0: 3.444102226717556e-23,
}


@pytest.mark.parametrize("x,expected", sorted(QUADRATURE_PINS.items()))
def test_pinned_values(x, expected):
    assert bessel_k1(x) == pytest.approx(expected, rel=1e-12)


def test_small_argument_limit():
    # x*K1(x) -> 1 as x -> 0
    assert abs(1e-3 * bessel_k1(1e-3) - 1.0) < 1e-3
    assert abs(1e-6 * bessel_k1(1e-6) - 1.0) < 1e-5


def test_matches_quadrature_log_spaced():
    for x in np.logspace(-3, math.log10(50.0), 50):
        ref = k1_quadrature(float(x))
        assert abs(bessel_k1(float(x)) - ref) / ref < 1e-10


def test_matches_quadrature_wide_range_scaled():
    # exponentially scaled comparison avoids underflow up to x = 700
    for x in np.logspace(-6, math.log10(700.0), 60):
        ref = k1e_scaled_quadrature(float(x))
        assert abs(bessel_k1e(float(x)) - ref) / ref < 1e-10


def test_branch_seam_is_smooth():
    lo = bessel_k1(2.0 - 1e-12)
    hi = bessel_k1(2.0 + 1e-12)
    assert abs(lo - hi) / lo < 1e-9


def test_monotone_decreasing():
    xs = np.logspace(-4, 2, 300)
    vals = [bessel_k1(float(x)) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_underflow_is_graceful():
    assert bessel_k1(800.0) == 0.0
    assert bessel_k1e(800.0) > 0.0
    assert bessel_k1(700.0) > 0.0


def test_scaled_variant_consistent():
    for x in (0.01, 0.5, 1.9, 2.1, 30.0, 200.0):
        assert bessel_k1e(x) == pytest.approx(bessel_k1(x) * math.exp(x), rel=1e-12)


def test_domain_errors():
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            bessel_k1(bad)
        with pytest.raises(ValueError):
            bessel_k1e(bad)
