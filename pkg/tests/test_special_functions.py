from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightcone_detectors.errors import DomainError
from lightcone_detectors.special_functions import (bessel_j0, bessel_j1, bessel_k0, bessel_k1,
                                                   bessel_y0, bessel_y1, k1_pole_free,
                                                   y1_pole_free)

mpmath.mp.dps = 30

# Sample points that cover every evaluation regime and both crossovers.
SAMPLES = np.concatenate((np.geomspace(1e-6, 1.0, 12), np.linspace(1.5, 50.0, 38)))


def _rel(a, b):
    return abs(a - b) / abs(b)


def _j1_series(x):
    x = mpmath.mpf(x)
    return mpmath.nsum(lambda k: (-1) ** k * (x / 2) ** (2 * k + 1)
                       / (mpmath.factorial(k) * mpmath.factorial(k + 1)), [0, mpmath.inf])


def _k1_integral(x):
    return mpmath.quad(lambda t: mpmath.exp(-x * mpmath.cosh(t)) * mpmath.cosh(t), [0, 1, 2, 4, 7])


def test_j1_zero_is_zero():
    assert bessel_j1(0.0) == 0.0
    assert bessel_j0(0.0) == 1.0


@pytest.mark.parametrize("x, expected", [(1.0, 0.44005058574493), (10.0, 0.04347274616886)])
def test_j1_reference_values(x, expected):
    oracle = float(_j1_series(x))
    assert bessel_j1(x) == pytest.approx(oracle, rel=1e-12)
    assert oracle == pytest.approx(expected, abs=1e-13)


def test_y1_reference_value():
    assert bessel_y1(1.0) == pytest.approx(float(mpmath.bessely(1, 1)), rel=1e-12)
    assert bessel_y1(1.0) == pytest.approx(-0.78121282130029, abs=1e-13)


@pytest.mark.parametrize("x, expected", [(1.0, 0.60190723019723), (10.0, 1.8648773453709e-5)])
def test_k1_reference_values(x, expected):
    oracle = float(_k1_integral(x))
    assert bessel_k1(x) == pytest.approx(oracle, rel=1e-12)
    assert oracle == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("x", SAMPLES)
def test_all_orders_match_mpmath(x):
    assert _rel(bessel_j0(x), float(mpmath.besselj(0, x))) < 1e-10 or abs(bessel_j0(x)) < 1e-14
    assert abs(bessel_j1(x) - float(mpmath.besselj(1, x))) < 1e-10 * max(abs(bessel_j1(x)), 1e-3)
    assert abs(bessel_y0(x) - float(mpmath.bessely(0, x))) < 1e-10 * max(abs(bessel_y0(x)), 1e-3)
    assert abs(bessel_y1(x) - float(mpmath.bessely(1, x))) < 1e-10 * max(abs(bessel_y1(x)), 1e-3)
    assert _rel(bessel_k0(x), float(mpmath.besselk(0, x))) < 1e-10
    assert _rel(bessel_k1(x), float(mpmath.besselk(1, x))) < 1e-10


def test_wronskian_on_dense_grid():
    x = np.linspace(0.1, 50.0, 2000)
    j1, y1 = bessel_j1(x), bessel_y1(x)
    dj1, dy1 = bessel_j0(x) - j1 / x, bessel_y0(x) - y1 / x
    residual = np.abs(j1 * dy1 - dj1 * y1 - 2.0 / (math.pi * x))
    assert residual.max() < 1e-10


def test_k1_positive_and_decreasing():
    values = bessel_k1(np.linspace(1e-3, 50.0, 500))
    assert np.all(values > 0)
    assert np.all(np.diff(values) < 0)


@pytest.mark.parametrize("bracket", [(3.8, 3.9), (7.0, 7.1), (10.1, 10.2)])
def test_j1_sign_change_in_zero_brackets(bracket):
    lo, hi = bracket
    assert bessel_j1(lo) * bessel_j1(hi) < 0


def test_small_argument_limits():
    xs = np.geomspace(1e-1, 1e-7, 7)
    y_gap = np.abs(xs * bessel_y1(xs) + 2.0 / math.pi)
    k_gap = np.abs(xs * bessel_k1(xs) - 1.0)
    assert np.all(np.diff(y_gap) < 0) and y_gap[-1] < 1e-12
    assert np.all(np.diff(k_gap) < 0) and k_gap[-1] < 1e-12


def test_pole_free_forms():
    for x in (1e-8, 0.3, 5.0, 30.0):
        xm = mpmath.mpf(x)
        assert y1_pole_free(x) == pytest.approx(float(mpmath.bessely(1, xm) + 2 / (mpmath.pi * xm)),
                                                abs=1e-12)
        assert k1_pole_free(x) == pytest.approx(float(mpmath.besselk(1, xm) - 1 / xm), abs=1e-12)


def test_array_in_array_out_scalar_in_float_out():
    assert isinstance(bessel_k1(1.0), float)
    out = bessel_j1(np.array([[1.0, 2.0], [3.0, 4.0]]))
    assert out.shape == (2, 2)


@pytest.mark.parametrize("func", [bessel_y0, bessel_y1, bessel_k0, bessel_k1])
@pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
def test_singular_orders_reject_bad_domain(func, x):
    with pytest.raises(DomainError):
        func(x)


@pytest.mark.parametrize("x", [-1.0, math.nan, -math.inf])
def test_regular_orders_reject_bad_domain(x):
    with pytest.raises(DomainError):
        bessel_j1(x)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.1, max_value=50.0))
def test_recurrence_between_orders(x):
    # J0 + J2 = (2/x) J1 with J2 from mpmath keeps the check independent of J1's code path.
    j2 = float(mpmath.besselj(2, x))
    assert abs(bessel_j0(x) + j2 - 2.0 / x * bessel_j1(x)) < 1e-10


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.1, max_value=50.0))
def test_k_wronskian_identity(x):
    # I0 K1 + I1 K0 = 1/x
    i0, i1 = float(mpmath.besseli(0, x)), float(mpmath.besseli(1, x))
    assert (i0 * bessel_k1(x) + i1 * bessel_k0(x)) * x == pytest.approx(1.0, rel=1e-10)
