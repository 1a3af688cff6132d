"""Brute-force reference values for the source-dependent amplitudes.

These bypass the interval-variable reduction entirely.  The propagators
are taken from their damped mode expansions,

    Delta_eps(r, tau) = -i/(4 pi^2 r) int dk k sin(kr)/omega e^{-eps omega} (e^{-i omega tau} - e^{i omega tau})
    W_eps(r, tau)     =  1/(4 pi^2 r) int dk k sin(kr)/omega e^{-eps omega} e^{-i omega tau},

the window integral over ``tau`` is done exactly for each mode, and the
momentum integral uses a fixed composite Gauss-Legendre grid.  Damping
shifts ``tau -> tau - i eps``, so the results are analytic in ``eps`` and
four halvings are Richardson-extrapolated to ``eps -> 0``.

Only tests and the self-test battery use this module.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .propagators import _richardson, momentum_cutoff
from .quadrature import QuadratureConfig
from .scenario import Scenario, SourceCase, lightcone_geometry

__all__ = [
    "oracle_p2_amplitude",
    "oracle_gd_amplitude",
    "oracle_udd",
    "oracle_gd",
]

_GL_X, _GL_W = np.polynomial.legendre.leggauss(8)
_LEVELS = 4


def _window_transform(nu: np.ndarray, a: float, b: float) -> np.ndarray:
    """``int_a^b e^{i nu tau} d tau`` evaluated without cancellation."""
    half = 0.5 * (b - a)
    return np.exp(0.5j * nu * (a + b)) * (b - a) * np.sinc(nu * half / math.pi)


def _k_grid(kmax: float, length: float, grid_n: int):
    """Composite 8-point Gauss-Legendre nodes on [0, kmax].

    ``grid_n`` nodes per resolution length ``min(2 pi / length, 1)``.
    """
    lam = min(2.0 * math.pi / length, 1.0)
    n_panels = max(1, math.ceil(kmax / lam * grid_n / 8.0))
    edges = np.linspace(0.0, kmax, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    k = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    w = (half[:, None] * _GL_W[None, :]).ravel()
    return k, w


def _prepare(scen: Scenario, grid_n: int, cfg: QuadratureConfig):
    if grid_n < 64:
        raise DomainError(f"oracle grid_n must be >= 64, got {grid_n}")
    if cfg.uv_damping <= 0:
        raise DomainError("oracles need uv_damping > 0")
    geo = lightcone_geometry(scen)
    if geo.case is SourceCase.AFTER:
        return None
    a, b = geo.tau_lo, geo.tau_hi
    gap = min(abs(a - geo.r), abs(b - geo.r))
    eps0 = cfg.uv_damping if gap == 0 else min(cfg.uv_damping, gap / 8.0)
    return geo, a, b, eps0


def _mode_sum(scen: Scenario, grid_n: int, cfg: QuadratureConfig, commutator: bool) -> complex:
    prep = _prepare(scen, grid_n, cfg)
    if prep is None:
        return 0j
    geo, a, b, eps0 = prep
    r, m, w = geo.r, scen.m, scen.omega_eg
    eps_min = eps0 * 0.5 ** (_LEVELS - 1)
    k, wt = _k_grid(momentum_cutoff(m, eps_min, cfg), r + b, grid_n)
    om = np.sqrt(k * k + m * m)
    base = wt * k * np.sin(k * r) / om / (4.0 * math.pi ** 2 * r)
    window = _window_transform(w - om, a, b)
    if commutator:
        window = window - _window_transform(w + om, a, b)
    values = []
    for j in range(_LEVELS):
        eps = eps0 * 0.5 ** j
        terms = base * np.exp(-eps * om) * window
        values.append(complex(math.fsum(terms.real), math.fsum(terms.imag)))
    phase = complex(math.cos(w * scen.y0), math.sin(w * scen.y0))
    return -1j * scen.c1 * scen.m_eg_abs * phase * _richardson(values)


def oracle_p2_amplitude(scen: Scenario, grid_n: int = 128,
                        cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """``c1 |m_eg| int e^{i w t} Delta(r, t - y0) dt`` from the mode expansion.

    Directly comparable to :func:`lightcone_detectors.response.amplitude_p2`.
    """
    return _mode_sum(scen, grid_n, cfg, commutator=True)


def oracle_gd_amplitude(scen: Scenario, grid_n: int = 128,
                        cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """``-i c1 |m_eg| int e^{i w t} W(r, t - y0) dt`` from the mode expansion.

    Equals ``P2/2 + P3`` of the reduced formulas, phase included.
    """
    return _mode_sum(scen, grid_n, cfg, commutator=False)


def oracle_udd(scen: Scenario, grid_n: int = 128,
               cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Source-dependent part of the UDD probability, ``g^2 |oracle P2|^2``."""
    return scen.g ** 2 * abs(oracle_p2_amplitude(scen, grid_n, cfg)) ** 2


def oracle_gd(scen: Scenario, grid_n: int = 128,
              cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """Glauber-detector probability, ``g^2 |oracle GD amplitude|^2``."""
    return scen.g ** 2 * abs(oracle_gd_amplitude(scen, grid_n, cfg)) ** 2
