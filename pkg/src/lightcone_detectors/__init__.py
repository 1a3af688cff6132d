"""Detector response near the light cone of a switched-on source.

The most used entry points are re-exported here; the submodules hold the
rest (F functions, oracles, free-field signal, sweep drivers).
"""

from .errors import (ConvergenceError, DetectorLabError, DomainError, IntegrandError,
                     InvariantViolation, ParseError, ScenarioError)
from .localization import Observable, density_profile, glauber_density, newton_wigner_density
from .quadrature import IntegralResult, QuadratureConfig
from .response import ResponseBreakdown, amplitude_p2, amplitude_p3, detect, vacuum_p1
from .scenario import DetectorKind, Scenario, SourceCase, lightcone_geometry
from .scenario_file import load_scenario, parse_scenario

__all__ = [
    "ConvergenceError",
    "DetectorLabError",
    "DomainError",
    "IntegrandError",
    "InvariantViolation",
    "ParseError",
    "ScenarioError",
    "Observable",
    "density_profile",
    "glauber_density",
    "newton_wigner_density",
    "IntegralResult",
    "QuadratureConfig",
    "ResponseBreakdown",
    "amplitude_p2",
    "amplitude_p3",
    "detect",
    "vacuum_p1",
    "DetectorKind",
    "Scenario",
    "SourceCase",
    "lightcone_geometry",
    "load_scenario",
    "parse_scenario",
]
