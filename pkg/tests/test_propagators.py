from __future__ import annotations

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lightcone_detectors.errors import DomainError
from lightcone_detectors.propagators import (POLE_STRENGTH, IntervalPoint, pauli_jordan_smooth,
                                             theta_frequency_split, vacuum_wightman_equal_point,
                                             wightman_closed_form, wightman_imag_kernel,
                                             wightman_momentum_oracle)
from lightcone_detectors.quadrature import QuadratureConfig

CFG = QuadratureConfig(rel_tol=1e-8, uv_damping=0.05)


def _random_points(seed, n, spacelike=None):
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < n:
        r, t = rng.uniform(0.3, 4.0), rng.uniform(-4.0, 4.0)
        s2 = t * t - r * r
        if abs(s2) <= 0.1 or abs(abs(t) - r) < 0.1:
            continue
        if spacelike is not None and (s2 < 0) != spacelike:
            continue
        points.append((r, t, rng.uniform(0.3, 2.5)))
    return points


def test_interval_point_derives_s2():
    assert IntervalPoint(2.0, 3.0).s2 == 5.0


def test_pauli_jordan_gated_outside_cone():
    assert pauli_jordan_smooth(-1.0, 1.0) == 0.0
    assert pauli_jordan_smooth(-1e-9, 3.0) == 0.0


def test_pauli_jordan_cone_limit():
    assert pauli_jordan_smooth(1e-14, 1.0) == pytest.approx(1 / (16 * math.pi), rel=1e-10)
    assert pauli_jordan_smooth(0.0, 1.0) == pytest.approx(1 / (16 * math.pi), rel=1e-15)


def test_pauli_jordan_reference_value():
    j1_2 = float(mpmath.besselj(1, 2))
    assert pauli_jordan_smooth(4.0, 1.0) == pytest.approx(j1_2 / (16 * math.pi), rel=1e-12)
    assert j1_2 == pytest.approx(0.576724, abs=1e-6)


def test_kernel_spacelike_reference_value():
    # Assembled from K1(2) = 0.139865...; the kernel is the (positive) real part of W.
    regular, pole = wightman_imag_kernel(-4.0, 1.0)
    k1_2 = float(mpmath.besselk(1, 2))
    assert regular + pole / -4.0 == pytest.approx(2 / (8 * math.pi ** 2 * 2) * k1_2, rel=1e-12)
    assert k1_2 == pytest.approx(0.139865, abs=1e-6)


@pytest.mark.parametrize("s2", [1e-6, -1e-6])
def test_pole_strength_from_small_argument_asymptotes(s2):
    regular, pole = wightman_imag_kernel(s2, 1.0)
    total = regular + pole / s2
    assert total * s2 == pytest.approx(-1 / (4 * math.pi ** 2), rel=1e-4)


def test_massless_kernel_is_pure_pole():
    regular, pole = wightman_imag_kernel(np.array([-3.0, -0.1, 0.2, 5.0]), 0.0)
    assert np.all(regular == 0.0)
    assert pole == POLE_STRENGTH


def test_kernel_rejects_the_pole():
    with pytest.raises(DomainError):
        wightman_imag_kernel(0.0, 1.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=0.05, max_value=20.0),
       st.one_of(st.just(0.0), st.floats(min_value=1e-3, max_value=5.0)), st.booleans())
def test_kernel_matches_bessel_closed_forms(s_abs, m, timelike):
    s2 = s_abs ** 2 if timelike else -s_abs ** 2
    regular, pole = wightman_imag_kernel(s2, m)
    assert pole == -1 / (4 * math.pi ** 2)
    if m == 0:
        expected = -1 / (4 * math.pi ** 2 * s2)
    elif timelike:
        expected = m * float(mpmath.bessely(1, m * s_abs)) / (8 * math.pi * s_abs)
    else:
        expected = m * float(mpmath.besselk(1, m * s_abs)) / (4 * math.pi ** 2 * s_abs)
    assert regular + pole / s2 == pytest.approx(expected, rel=1e-9, abs=1e-14)


def test_closed_form_matches_momentum_oracle_at_random_points():
    for r, t, m in _random_points(7, 20):
        oracle = wightman_momentum_oracle(IntervalPoint(r, t), m, CFG)
        s2 = t * t - r * r
        regular, pole = wightman_imag_kernel(s2, m)
        rebuilt = complex(regular + pole / s2, math.copysign(1, t) * pauli_jordan_smooth(s2, m))
        assert abs(oracle - rebuilt) < 1e-3 * abs(rebuilt), (r, t, m)
        assert abs(wightman_closed_form(r, t, m) - rebuilt) < 1e-12 * abs(rebuilt)


def test_commutator_vanishes_at_benchmark_spacelike_point():
    p, q = IntervalPoint(2.0, 1.0), IntervalPoint(2.0, -1.0)
    diff = wightman_momentum_oracle(p, 1.0, CFG) - wightman_momentum_oracle(q, 1.0, CFG)
    assert abs(diff.imag) < 1e-6


def test_commutator_vanishes_at_random_spacelike_points():
    points = _random_points(11, 20, spacelike=True)
    values = [(wightman_momentum_oracle(IntervalPoint(r, t), m, CFG),
               wightman_momentum_oracle(IntervalPoint(r, -t), m, CFG)) for r, t, m in points]
    scale = max(abs(a) for a, _ in values)
    for a, b in values:
        assert abs((a - b).imag) < 1e-5 * scale


@pytest.mark.parametrize("m", [0.0, 0.5, 2.0])
@pytest.mark.parametrize("r", [0.3, 1.0, 3.0])
def test_equal_time_value_is_real_and_positive(m, r):
    w = wightman_momentum_oracle(IntervalPoint(r, 0.0), m, CFG)
    assert w.real > 0
    assert abs(w.imag) < 1e-9 * w.real


def test_closed_form_rejects_cone():
    with pytest.raises(DomainError):
        wightman_closed_form(1.0, -1.0, 1.0)


def test_equal_point_massless_zero_time():
    eps = 0.05
    value = vacuum_wightman_equal_point(0.0, 0.0, CFG)
    assert value == pytest.approx(1 / (4 * math.pi ** 2 * eps ** 2), rel=1e-12)


@pytest.mark.parametrize("tau", [-2.0, 0.7, 3.0])
def test_equal_point_massless_matches_shifted_pole(tau):
    # int_0^inf k e^{-(eps + i tau) k} dk = 1/(eps + i tau)^2
    eps = CFG.uv_damping
    exact = 1 / (4 * math.pi ** 2 * (eps + 1j * tau) ** 2)
    assert abs(vacuum_wightman_equal_point(tau, 0.0, CFG) - exact) < 1e-9 * abs(exact)


def test_equal_point_massive_stable_under_cutoff_doubling():
    low = vacuum_wightman_equal_point(2.0, 1.0, QuadratureConfig(uv_damping=0.05, k_max=400.0))
    high = vacuum_wightman_equal_point(2.0, 1.0, QuadratureConfig(uv_damping=0.05, k_max=800.0))
    assert math.isfinite(abs(high))
    assert abs(high - low) < 1e-3 * abs(high)


def test_equal_point_needs_damping():
    with pytest.raises(DomainError):
        vacuum_wightman_equal_point(1.0, 1.0, QuadratureConfig(uv_damping=0.0))


def test_theta_split_recovers_step():
    cfg = QuadratureConfig(k_max=1e3)
    plus, minus = theta_frequency_split(1.0, 1e-3, cfg)
    assert abs(plus + minus - 1) < 0.02
    plus, minus = theta_frequency_split(-1.0, 1e-3, cfg)
    assert abs(plus + minus) < 0.02
    assert abs(plus) > 0.01


def test_theta_split_rejects_bad_arguments():
    with pytest.raises(DomainError):
        theta_frequency_split(1.0, 0.0, CFG)
    with pytest.raises(DomainError):
        theta_frequency_split(0.0, 1e-3, CFG)
