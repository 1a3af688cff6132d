from __future__ import annotations

import math

import pytest

from lightcone_detectors.errors import ScenarioError
from lightcone_detectors.scenario import DetectorKind, Scenario, SourceCase, lightcone_geometry


def test_benchmark_defaults():
    scen = Scenario()
    assert (scen.m, scen.omega_eg, scen.c1, scen.m_eg_abs, scen.g) == (1.0, 1.0, 1.0, 1.0, 1.0)
    assert scen.r == 1.0


def test_distance_from_positions():
    assert Scenario(y=(1.0, 2.0, 3.0), x=(4.0, 6.0, 3.0)).r == 5.0


@pytest.mark.parametrize("changes, field", [
    ({"t_i": 3.0, "t_f": 1.0}, "window"),
    ({"t_i": 1.0, "t_f": 1.0}, "window"),
    ({"x": (0.0, 0.0, 0.0)}, "x"),
    ({"m": -1.0}, "m"),
    ({"omega_eg": 0.0}, "omega_eg"),
    ({"y0": math.inf}, "y0"),
    ({"x": (1.0, 0.0)}, "x"),
])
def test_invalid_scenarios_name_the_field(changes, field):
    with pytest.raises(ScenarioError) as info:
        Scenario(**changes)
    assert info.value.field == field


def test_replace_moves_detector_along_x():
    scen = Scenario(y=(1.0, 1.0, 0.0)).replace(r=2.5)
    assert scen.x == (3.5, 1.0, 0.0)
    assert scen.r == 2.5


@pytest.mark.parametrize("y0, case", [(0.0, SourceCase.BEFORE), (0.5, SourceCase.INSIDE),
                                      (1.0, SourceCase.INSIDE), (3.0, SourceCase.AFTER)])
def test_case_classification(y0, case):
    assert lightcone_geometry(Scenario(y0=y0)).case is case


def test_geometry_intervals():
    geo = lightcone_geometry(Scenario(y0=1.0, t_i=0.5, t_f=4.0).replace(r=2.0))
    assert geo.tau_lo == 0.0 and geo.tau_hi == 3.0
    assert geo.s_lo2 == -4.0 and geo.s_hi2 == 5.0
    assert geo.s_i2 == 0.25 - 4.0
    assert not geo.on_cone


def test_on_cone_flag():
    assert lightcone_geometry(Scenario(t_f=1.0)).on_cone
    assert lightcone_geometry(Scenario(t_i=1.0)).on_cone
    assert not lightcone_geometry(Scenario(y0=5.0, t_f=6.0).replace(t_i=4.0, y0=7.0)).on_cone


def test_detector_kind_parse():
    assert DetectorKind.parse("gd") is DetectorKind.GD
    assert DetectorKind.parse("MD") is DetectorKind.MD
    assert DetectorKind.parse(DetectorKind.UDD) is DetectorKind.UDD
    with pytest.raises(ScenarioError):
        DetectorKind.parse("xyz")
