"""Physical parameters of one detector/source experiment and its light-cone geometry."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Tuple

from .errors import ScenarioError

__all__ = [
    "Scenario",
    "SourceCase",
    "DetectorKind",
    "LightconeGeometry",
    "lightcone_geometry",
]

Vec3 = Tuple[float, float, float]


class SourceCase(str, enum.Enum):
    """Timing of the source event ``y0`` relative to the window ``[t_i, t_f]``."""

    BEFORE = "SourceBeforeWindow"
    INSIDE = "SourceInsideWindow"
    AFTER = "SourceAfterWindow"


class DetectorKind(str, enum.Enum):
    """Unruh-DeWitt, Glauber, or Milonni detector."""

    UDD = "UDD"
    GD = "GD"
    MD = "MD"

    @classmethod
    def parse(cls, value) -> "DetectorKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ScenarioError("kind", f"unknown detector {value!r}; expected udd, gd or md") from None


def _vec3(name: str, value) -> Vec3:
    try:
        vec = tuple(float(v) for v in value)
    except TypeError:
        raise ScenarioError(name, f"expected 3 reals, got {value!r}") from None
    if len(vec) != 3:
        raise ScenarioError(name, f"expected 3 reals, got {len(vec)}")
    if not all(math.isfinite(v) for v in vec):
        raise ScenarioError(name, "components must be finite")
    return vec


@dataclass(frozen=True)
class Scenario:
    """A two-level detector at rest at ``x`` and a point source fired at ``(y0, y)``.

    Natural units throughout.  The detector couples to the field during
    ``[t_i, t_f]``.

    Attributes
    ----------
    m : float
        Field mass, ``m >= 0``.
    omega_eg : float
        Detector gap, ``> 0``.
    c1, m_eg_abs : float
        Detector-field coupling and monopole matrix element magnitude.
    g : float
        Source-field coupling.
    y0, y : float, 3-tuple
        Time and position of the source event.
    x : 3-tuple
        Detector position; must differ from ``y``.
    t_i, t_f : float
        Detection window, ``t_i < t_f``.
    """

    m: float = 1.0
    omega_eg: float = 1.0
    c1: float = 1.0
    m_eg_abs: float = 1.0
    g: float = 1.0
    y0: float = 0.0
    y: Vec3 = (0.0, 0.0, 0.0)
    x: Vec3 = (1.0, 0.0, 0.0)
    t_i: float = 0.5
    t_f: float = 3.0
    r: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("m", "omega_eg", "c1", "m_eg_abs", "g", "y0", "t_i", "t_f"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ScenarioError(name, f"expected a real number, got {value!r}") from None
            if not math.isfinite(value):
                raise ScenarioError(name, "must be finite")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "y", _vec3("y", self.y))
        object.__setattr__(self, "x", _vec3("x", self.x))
        if self.m < 0:
            raise ScenarioError("m", f"mass must be >= 0, got {self.m}")
        if self.omega_eg <= 0:
            raise ScenarioError("omega_eg", f"detector gap must be > 0, got {self.omega_eg}")
        if self.m_eg_abs < 0:
            raise ScenarioError("m_eg_abs", f"must be >= 0, got {self.m_eg_abs}")
        if not self.t_i < self.t_f:
            raise ScenarioError("window", f"need t_i < t_f, got [{self.t_i}, {self.t_f}]")
        r = math.dist(self.x, self.y)
        if r <= 0:
            raise ScenarioError("x", "detector position coincides with the source (r = 0)")
        object.__setattr__(self, "r", r)

    def replace(self, **changes) -> "Scenario":
        """Copy with some fields changed; ``r`` may be given to move the detector along x."""
        data = {name: getattr(self, name) for name in
                ("m", "omega_eg", "c1", "m_eg_abs", "g", "y0", "y", "x", "t_i", "t_f")}
        if "r" in changes:
            r = float(changes.pop("r"))
            y = _vec3("y", changes.get("y", data["y"]))
            changes["x"] = (y[0] + r, y[1], y[2])
        data.update(changes)
        return Scenario(**data)


@dataclass(frozen=True)
class LightconeGeometry:
    """Interval data that gate every response formula.

    ``tau_lo`` and ``tau_hi`` bound the part of the window after the source
    event, measured from ``y0``; ``s_lo2`` and ``s_hi2`` are the matching
    intervals ``tau^2 - r^2``.  ``on_cone`` marks a window edge lying exactly
    on the light cone.
    """

    r: float
    s_i2: float
    s_f2: float
    case: SourceCase
    tau_lo: float
    tau_hi: float
    s_lo2: float
    s_hi2: float
    on_cone: bool


def _interval(tau: float, r: float) -> float:
    # (tau - r)(tau + r) keeps the sign exact when tau is close to r
    return (tau - r) * (tau + r)


def lightcone_geometry(scen: Scenario) -> LightconeGeometry:
    """Classify the source timing and compute the window's interval values."""
    r = scen.r
    if scen.y0 < scen.t_i:
        case = SourceCase.BEFORE
    elif scen.y0 < scen.t_f:
        case = SourceCase.INSIDE
    else:
        case = SourceCase.AFTER
    tau_hi = scen.t_f - scen.y0
    tau_lo = max(scen.t_i - scen.y0, 0.0)
    if case is SourceCase.AFTER:
        tau_lo = tau_hi = 0.0
    s_lo2 = _interval(tau_lo, r)
    s_hi2 = _interval(tau_hi, r)
    on_cone = case is not SourceCase.AFTER and (tau_hi == r or tau_lo == r)
    return LightconeGeometry(
        r=r,
        s_i2=_interval(scen.t_i - scen.y0, r),
        s_f2=_interval(scen.t_f - scen.y0, r),
        case=case,
        tau_lo=tau_lo,
        tau_hi=tau_hi,
        s_lo2=s_lo2,
        s_hi2=s_hi2,
        on_cone=on_cone,
    )
