from __future__ import annotations

import math

import numpy as np
import pytest

from lightcone_detectors.errors import DomainError
from lightcone_detectors.localization import (Observable, density_profile, glauber_density,
                                              newton_wigner_density)
from lightcone_detectors.propagators import (IntervalPoint, pauli_jordan_smooth,
                                             wightman_imag_kernel, wightman_momentum_oracle)
from lightcone_detectors.quadrature import QuadratureConfig
from lightcone_detectors.scenario import Scenario

CFG = QuadratureConfig(rel_tol=1e-8, uv_damping=0.05)
DENSITIES = [glauber_density, newton_wigner_density]


@pytest.mark.parametrize("density", DENSITIES)
@pytest.mark.parametrize("t", [-1.0, 0.0])
def test_zero_before_the_source_fires(density, t):
    assert density(2.0, t, Scenario(), CFG) == 0.0


@pytest.mark.parametrize("density", DENSITIES)
def test_positive_at_spacelike_point(density):
    assert density(3.0, 1.0, Scenario(), CFG) > 0.0


@pytest.mark.parametrize("density", DENSITIES)
def test_quadruples_with_double_source_coupling(density):
    one = density(3.0, 1.0, Scenario(), CFG)
    assert density(3.0, 1.0, Scenario(g=2.0), CFG) == pytest.approx(4 * one, rel=1e-12)


def test_newton_wigner_heavy_field_vanishes():
    assert newton_wigner_density(3.0, 1.0, Scenario(m=30.0), CFG) < 1e-6


def test_newton_wigner_needs_damping():
    with pytest.raises(DomainError):
        newton_wigner_density(3.0, 1.0, Scenario(), QuadratureConfig(uv_damping=0.0))


def test_newton_wigner_stable_under_cutoff_doubling():
    low = newton_wigner_density(3.0, 1.0, Scenario(), QuadratureConfig(uv_damping=0.05, k_max=400.0))
    high = newton_wigner_density(3.0, 1.0, Scenario(), QuadratureConfig(uv_damping=0.05, k_max=800.0))
    assert abs(high - low) < 1e-2 * high


@pytest.mark.parametrize("r, tau", [(0.5, 2.0), (1.0, 3.0), (2.0, 2.5)])
def test_glauber_timelike_matches_branch_decomposition(r, tau):
    s2 = tau * tau - r * r
    regular, pole = wightman_imag_kernel(s2, 1.0)
    rebuilt = (regular + pole / s2) ** 2 + pauli_jordan_smooth(s2, 1.0) ** 2
    assert glauber_density(r, tau, Scenario(), CFG) == pytest.approx(rebuilt, rel=1e-3)


def test_glauber_spacelike_matches_mode_oracle():
    oracle = abs(wightman_momentum_oracle(IntervalPoint(3.0, 1.0), 1.0, CFG)) ** 2
    assert glauber_density(3.0, 1.0, Scenario(), CFG) == pytest.approx(oracle, rel=1e-3)


def test_glauber_on_cone_is_finite():
    assert math.isfinite(glauber_density(2.0, 2.0, Scenario(), CFG))


def test_profile_single_point_reduces_to_density():
    prof = density_profile("glauber", 2.0, [1.5], Scenario(), CFG)
    assert prof.points == ((1.5, glauber_density(1.5, 2.0, Scenario(), CFG)),)
    assert prof.observable is Observable.GLAUBER
    assert prof.r_lightcone == 2.0


@pytest.mark.parametrize("observable", ["glauber", "nw"])
def test_profile_values_nonnegative_and_ordered(observable):
    grid = np.linspace(0.5, 6.0, 12)
    serial = density_profile(observable, 2.0, grid, Scenario(), CFG)
    threaded = density_profile(observable, 2.0, grid, Scenario(), CFG, workers=4)
    assert serial.points == threaded.points
    assert all(v >= 0 for _, v in serial.points)


def test_profile_interior_exceeds_far_exterior():
    prof = density_profile("glauber", 2.0, [1.0, 6.0], Scenario(), CFG)
    (_, inner), (_, outer) = prof.points
    assert inner >= 10 * outer


def test_profile_rejects_bad_grids():
    with pytest.raises(DomainError):
        density_profile("glauber", 2.0, [2.0, 1.0], Scenario(), CFG)
    with pytest.raises(DomainError):
        density_profile("glauber", 2.0, [0.0, 1.0], Scenario(), CFG)
    with pytest.raises(DomainError):
        density_profile("charge", 2.0, [1.0], Scenario(), CFG)


def test_observable_aliases():
    assert Observable.parse("Newton-Wigner") is Observable.NEWTON_WIGNER
    assert Observable.parse("GlauberDensity") is Observable.GLAUBER
