"""Detection probabilities of the UDD, GD and MD for a point source.

The source fires at ``(y0, y)``; the detector at ``x`` (distance ``r``)
is switched on during ``[t_i, t_f]``.  Every source-dependent amplitude is
a time integral of ``exp(i omega_eg t)`` against a propagator, rewritten as
an integral over the interval ``u = (t - y0)^2 - r^2`` with the Jacobian
``h(u) = exp(i omega_eg sqrt(u + r^2)) / (2 sqrt(u + r^2))``:

``f1``
    commutator branch, ``2 e^{i w y0} [-e^{i w r}/(8 pi r) + int h m J1/(8 pi s)]``;
    the first term is the light-cone delta function integrated exactly.
``f2``
    time-like Y1 branch of ``Re W``, ``e^{i w y0} int h m Y1/(8 pi s)``.
``f3``
    space-like K1 branch of ``Re W``, ``e^{i w y0} int h m K1/(4 pi^2 s)``.

All three take ``(u2, v2)`` and integrate from ``v2`` up to ``u2``.

Amplitudes
----------
``P2 = c1 |m_eg| int e^{i w t} Delta dt`` over the part of the window after
the source; it vanishes identically unless the window reaches the forward
light cone.  ``P3 = -i c1 |m_eg| int e^{i w t} Re W dt`` combines ``f2`` and
``f3``; when the window crosses the cone the two branches share the pole
``-1/(4 pi^2 u)`` and are integrated together as a principal value.  The
Glauber amplitude is ``P2/2 + P3 = -i c1 |m_eg| int e^{i w t} W dt``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .propagators import POLE_STRENGTH, momentum_cutoff, wightman_imag_kernel
from .quadrature import (QuadratureConfig, integrate_adaptive, integrate_principal_value,
                         integrate_sqrt_endpoint)
from .scenario import (DetectorKind, LightconeGeometry, Scenario, SourceCase,
                       lightcone_geometry)
from .special_functions import bessel_j1

__all__ = [
    "ResponseBreakdown",
    "f1",
    "f2",
    "f3",
    "amplitude_p2",
    "amplitude_p3",
    "amplitude_p3_clipped",
    "vacuum_p1",
    "detect",
]


@dataclass(frozen=True)
class ResponseBreakdown:
    """Detection probability split into vacuum and source-dependent parts.

    ``vacuum_p1`` is only set for the UDD and ``amp_p3`` only for GD/MD.
    For the MD, ``amp_p3`` holds the causally clipped amplitude.
    """

    detector: DetectorKind
    case: SourceCase
    vacuum_p1: Optional[float]
    amp_p2: complex
    amp_p3: Optional[complex]
    probability: float
    epsilon_uv: float
    on_cone: bool


# ---------------------------------------------------------------------------
# integrand pieces

def _jacobian(u, r: float, w: float):
    rho = np.sqrt(u + r * r)
    return np.exp(1j * w * rho) / (2.0 * rho)


def _jacobian_slope(u, r: float, w: float):
    """``(h(u) - h(0)) / u`` without cancellation for small ``u``."""
    u = np.asarray(u, dtype=float)
    rho = np.sqrt(u + r * r)
    d = u / (rho + r)                                   # rho - r
    safe = np.where(d == 0, 1.0, d)
    em1 = (-2.0 * np.sin(0.5 * w * safe) ** 2 + 1j * np.sin(w * safe)) / safe
    em1 = np.where(d == 0, 1j * w, em1)                 # (e^{i w d} - 1)/d
    return np.exp(1j * w * r) * (r * em1 - 1.0) / (2.0 * rho * r * (rho + r))


def _kernel(u, m: float):
    """Full Y1/K1 kernel (regular part plus pole) at ``u != 0``."""
    reg, pole = wightman_imag_kernel(u, m)
    return reg + pole / np.asarray(u, dtype=float)


def _check_order(u2: float, v2: float):
    if not (math.isfinite(u2) and math.isfinite(v2)):
        raise DomainError(f"interval limits must be finite, got ({u2}, {v2})")
    if v2 > u2:
        raise DomainError(f"lower limit v2={v2} exceeds upper limit u2={u2}")


def _delta_term(scen: Scenario) -> complex:
    """Light-cone delta contribution ``-e^{i w (y0 + r)}/(8 pi r)`` of f1, before the factor 2."""
    return -cmath.exp(1j * scen.omega_eg * (scen.y0 + scen.r)) / (8.0 * math.pi * scen.r)


def _f1_integral(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """``2 e^{i w y0} int_{v2}^{u2} h(u) m J1(m sqrt u)/(8 pi sqrt u) du``."""
    m, r, w = scen.m, scen.r, scen.omega_eg
    if m == 0 or u2 == v2:
        return 0j

    def smooth(u):
        return _jacobian(u, r, w) * m * bessel_j1(m * np.sqrt(u)) / (8.0 * math.pi)

    res = integrate_sqrt_endpoint(smooth, v2, u2, cfg, omega=w + m)
    return 2.0 * cmath.exp(1j * w * scen.y0) * res.value


def _timelike_integral(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """``int_{v2}^{u2} h(u) K(u) du`` for ``0 < v2 <= u2`` (no phase factor)."""
    m, r, w = scen.m, scen.r, scen.omega_eg
    if u2 == v2:
        return 0j

    def f(u):
        return _jacobian(u, r, w) * _kernel(u, m)

    omega = 0.5 * w / r + 0.5 * m / math.sqrt(v2)
    return integrate_adaptive(f, v2, u2, cfg, omega=omega).value


def _spacelike_integral(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """``int_{v2}^{u2} h(u) K(u) du`` for ``-r^2 <= v2 <= u2 < 0`` (no phase factor).

    Integrated in ``v = u + r^2`` so the ``1/sqrt(v)`` Jacobian at the source
    time (``v = 0``) is absorbed by the square-root endpoint engine.
    """
    m, r, w = scen.m, scen.r, scen.omega_eg
    if u2 == v2:
        return 0j
    r2 = r * r

    def smooth(v):
        return 0.5 * np.exp(1j * w * np.sqrt(v)) * _kernel(v - r2, m)

    return integrate_sqrt_endpoint(smooth, max(v2 + r2, 0.0), u2 + r2, cfg, omega=w).value


def _pv_parts(scen: Scenario):
    """Regular integrand and pole strength of ``h(u) K(u)`` around ``u = 0``."""
    m, r, w = scen.m, scen.r, scen.omega_eg

    def f_reg(u):
        reg, pole = wightman_imag_kernel(u, m)
        return _jacobian(u, r, w) * reg + pole * _jacobian_slope(u, r, w)

    strength = POLE_STRENGTH / (2.0 * r) * cmath.exp(1j * w * r)   # pole * h(0)
    return f_reg, strength


def _crossing_integral(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Principal value of ``int_{v2}^{u2} h(u) K(u) du`` for ``v2 < 0 < u2``."""
    f_reg, strength = _pv_parts(scen)
    # keep the principal-value range away from the source time u = -r^2
    split = 0.5 * v2
    pv = integrate_principal_value(f_reg, split, u2, strength, cfg,
                                   omega=scen.omega_eg + scen.m).value
    return pv + _spacelike_integral(split, v2, scen, cfg)


def _finite_part_from_cone(u2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Hadamard finite part of ``int_0^{u2} h(u) K(u) du`` with reference scale ``r^2``."""
    f_reg, strength = _pv_parts(scen)

    def smooth(u):
        return np.sqrt(u) * f_reg(u)

    res = integrate_sqrt_endpoint(smooth, 0.0, u2, cfg, omega=scen.omega_eg + scen.m)
    return res.value + strength * math.log(u2 / (scen.r * scen.r))


# ---------------------------------------------------------------------------
# public F functions

def f1(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Commutator-branch integral, light-cone delta term included.

    ``2 e^{i w y0} {-e^{i w r}/(8 pi r) + int_{v2}^{u2} h(u) m J1(m sqrt u)/(8 pi sqrt u) du}``
    for ``0 <= v2 <= u2``.
    """
    _check_order(u2, v2)
    if v2 < 0:
        raise DomainError(f"f1 is the time-like branch; needs v2 >= 0, got {v2}")
    return 2.0 * _delta_term(scen) + _f1_integral(u2, v2, scen, cfg)


def f2(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Time-like Y1 branch ``e^{i w y0} int_{v2}^{u2} h(u) m Y1(m sqrt u)/(8 pi sqrt u) du``.

    Needs ``0 < v2 <= u2``.  With ``v2 = 0`` the integrand has the
    light-cone pole at the endpoint; the amplitudes pair it with the
    space-like branch as a principal value instead.
    """
    _check_order(u2, v2)
    if v2 <= 0:
        raise DomainError("f2 needs v2 > 0: the pole at u = 0 is only defined "
                          "as a principal value paired with f3 (see amplitude_p3)")
    return cmath.exp(1j * scen.omega_eg * scen.y0) * _timelike_integral(u2, v2, scen, cfg)


def f3(u2: float, v2: float, scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Space-like K1 branch ``e^{i w y0} int_{v2}^{u2} h(u) m K1(m sqrt(-u))/(4 pi^2 sqrt(-u)) du``.

    Needs ``-r^2 <= v2 <= u2 < 0``; ``u = -r^2`` is the source time itself.
    """
    _check_order(u2, v2)
    if u2 >= 0:
        raise DomainError("f3 needs u2 < 0: the pole at u = 0 is only defined "
                          "as a principal value paired with f2 (see amplitude_p3)")
    if v2 < -scen.r * scen.r:
        raise DomainError(f"f3 needs v2 >= -r^2 = {-scen.r ** 2}, got {v2}")
    return cmath.exp(1j * scen.omega_eg * scen.y0) * _spacelike_integral(u2, v2, scen, cfg)


# ---------------------------------------------------------------------------
# amplitudes

def _source_window(scen: Scenario) -> Optional[LightconeGeometry]:
    geo = lightcone_geometry(scen)
    if geo.case is SourceCase.AFTER:
        return None
    return geo


def amplitude_p2(scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Source-dependent UDD amplitude ``c1 |m_eg| int e^{i w t} Delta(r, t - y0) dt``.

    Exactly zero unless the window reaches the forward light cone of the
    source (and in the case where the source fires after the window).  The
    delta-function term is included when the window starts at or before the
    cone, with ``Theta(0) = 1``.
    """
    geo = _source_window(scen)
    if geo is None or geo.tau_hi < geo.r:
        return 0j
    pref = scen.c1 * scen.m_eg_abs
    integral = _f1_integral(geo.s_hi2, max(geo.s_lo2, 0.0), scen, cfg)
    if geo.tau_lo <= geo.r:
        return pref * (2.0 * _delta_term(scen) + integral)
    return pref * integral


def _check_edges(geo: LightconeGeometry):
    if geo.on_cone:
        raise DomainError("a window edge lies exactly on the light cone, where the "
                          "Glauber amplitude diverges logarithmically")


def amplitude_p3(scen: Scenario, cfg: QuadratureConfig) -> complex:
    """The ``Re W`` part of the Glauber amplitude, ``-i c1 |m_eg| int e^{i w t} Re W dt``.

    Non-zero in general even when the whole window is space-like to the
    source.  Window edges exactly on the cone are a domain error.
    """
    geo = _source_window(scen)
    if geo is None:
        return 0j
    _check_edges(geo)
    lo, hi = geo.s_lo2, geo.s_hi2
    if hi < 0:
        integral = _spacelike_integral(hi, lo, scen, cfg)
    elif lo > 0:
        integral = _timelike_integral(hi, lo, scen, cfg)
    else:
        integral = _crossing_integral(hi, lo, scen, cfg)
    phase = cmath.exp(1j * scen.omega_eg * scen.y0)
    return -1j * scen.c1 * scen.m_eg_abs * phase * integral


def amplitude_p3_clipped(scen: Scenario, cfg: QuadratureConfig) -> complex:
    """Milonni-detector counterpart of :func:`amplitude_p3`.

    The source field is gated by ``Theta(t - y0 - r)``, so only the
    time-like part of the window contributes.  When the window starts
    before the cone the ``1/u`` pole sits on the clipped edge and the
    logarithmically divergent integral is replaced by its Hadamard finite
    part with reference scale ``r^2``.
    """
    geo = _source_window(scen)
    if geo is None or geo.tau_hi <= geo.r:
        return 0j
    if geo.s_lo2 > 0:
        integral = _timelike_integral(geo.s_hi2, geo.s_lo2, scen, cfg)
    else:
        integral = _finite_part_from_cone(geo.s_hi2, scen, cfg)
    phase = cmath.exp(1j * scen.omega_eg * scen.y0)
    return -1j * scen.c1 * scen.m_eg_abs * phase * integral


def vacuum_p1(scen: Scenario, cfg: QuadratureConfig) -> float:
    """Vacuum (source-independent) part of the UDD probability.

    ``c1^2 |m_eg|^2 int dt' dt'' e^{i w (t'' - t')} W0(t' - t'')`` over the
    window, with ``W0`` the damped equal-point Wightman function.  The time
    integrals are done per mode, leaving

    ``c1^2 |m_eg|^2 / (4 pi^2) int dk k^2/omega e^{-eps omega} 4 sin^2(nu T/2)/nu^2``

    with ``nu = omega_eg + omega`` and ``T = t_f - t_i``.
    """
    eps = cfg.uv_damping
    if eps <= 0:
        raise DomainError("vacuum_p1 needs uv_damping > 0; the undamped value diverges")
    m, w = scen.m, scen.omega_eg
    length = scen.t_f - scen.t_i
    pref = (scen.c1 * scen.m_eg_abs) ** 2 / (4.0 * math.pi ** 2)

    def f(k):
        om = np.sqrt(k * k + m * m)
        nu = w + om
        safe = np.where(om > 0, om, 1.0)
        return np.where(om > 0, k * k / safe, 0.0) * np.exp(-eps * om) \
            * (2.0 * np.sin(0.5 * nu * length) / nu) ** 2

    res = integrate_adaptive(f, 0.0, momentum_cutoff(m, eps, cfg), cfg, omega=length)
    return pref * res.value.real


def detect(scen: Scenario, kind, cfg: QuadratureConfig) -> ResponseBreakdown:
    """Detection probability of one detector model for a scenario.

    UDD: ``P1 + g^2 |P2|^2``.  GD: ``g^2 |P2/2 + P3|^2``, zero when the
    source fires after the window.  MD: ``g^2 |P2/2 + P3_clipped|^2``,
    exactly zero unless the window reaches the forward cone.
    """
    kind = DetectorKind.parse(kind)
    geo = lightcone_geometry(scen)
    g2 = scen.g * scen.g
    p2 = amplitude_p2(scen, cfg)
    if kind is DetectorKind.UDD:
        p1 = vacuum_p1(scen, cfg)
        prob = p1 + g2 * abs(p2) ** 2
        return ResponseBreakdown(kind, geo.case, p1, p2, None, prob, cfg.uv_damping, geo.on_cone)
    if kind is DetectorKind.GD:
        p3 = amplitude_p3(scen, cfg)
    else:
        p3 = amplitude_p3_clipped(scen, cfg)
    prob = g2 * abs(0.5 * p2 + p3) ** 2
    return ResponseBreakdown(kind, geo.case, None, p2, p3, prob, cfg.uv_damping, geo.on_cone)
