"""Two-point functions of a free massive scalar field in 3+1 dimensions.

Conventions
-----------
``W(r, t) = <0|Phi(x) Phi(0)|0>`` is the positive-frequency Wightman
function, with ``r = |x|`` and ``t = x^0``.  Its momentum representation is

    W(r, t) = 1/(4 pi^2 r) int_0^inf dk  k sin(kr) / omega  exp(-i omega t)

with ``omega = sqrt(k^2 + m^2)``.  Off the light cone (``s2 = t^2 - r^2``):

* time-like:   ``W = m/(8 pi s) [Y1(m s) + i sgn(t) J1(m s)]``,  ``s = sqrt(s2)``
* space-like:  ``W = m K1(m s)/(4 pi^2 s)``,                      ``s = sqrt(-s2)``

so ``Im W`` is one half of the Pauli-Jordan commutator function and
``Re W`` is the Y1/K1 kernel returned by :func:`wightman_imag_kernel`.
Both branches of ``Re W`` carry the same pole ``-1/(4 pi^2 s2)`` at the
cone, which is what makes the principal value across the cone finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import DomainError
from .quadrature import QuadratureConfig, integrate_adaptive
from .special_functions import bessel_j1, bessel_k1, bessel_y1, k1_pole_free, y1_pole_free

__all__ = [
    "IntervalPoint",
    "POLE_STRENGTH",
    "pauli_jordan_smooth",
    "wightman_imag_kernel",
    "wightman_closed_form",
    "wightman_momentum_oracle",
    "vacuum_wightman_equal_point",
    "theta_frequency_split",
    "momentum_cutoff",
]

POLE_STRENGTH = -1.0 / (4.0 * math.pi ** 2)

# exp(-40) ~ 4e-18: the damped momentum integrands are negligible beyond this
_DAMPING_DECADES = 40.0


@dataclass(frozen=True)
class IntervalPoint:
    """Separation ``(r, t)`` between two events, with ``s2 = t^2 - r^2``."""

    r: float
    t: float
    s2: float = field(init=False)

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.t)):
            raise DomainError(f"IntervalPoint needs finite r and t, got ({self.r}, {self.t})")
        if self.r < 0:
            raise DomainError(f"IntervalPoint.r must be >= 0, got {self.r}")
        object.__setattr__(self, "s2", self.t * self.t - self.r * self.r)


def _check_mass(m: float) -> float:
    m = float(m)
    if not math.isfinite(m) or m < 0:
        raise DomainError(f"mass must be finite and >= 0, got {m}")
    return m


def pauli_jordan_smooth(s2, m: float):
    """Smooth (J1) branch of the commutator kernel, ``m J1(m s)/(8 pi s)``.

    Zero for space-like ``s2 < 0``.  At ``s2 = 0`` the step is taken as
    ``Theta(0) = 1`` and the value is the limit ``m^2/(16 pi)``.  The
    ``delta(s2)`` term on the cone is never sampled; callers add it
    analytically.

    Examples
    --------
    >>> pauli_jordan_smooth(-1.0, 1.0)
    0.0
    >>> round(pauli_jordan_smooth(4.0, 1.0), 8)
    0.01147358
    """
    m = _check_mass(m)
    arr = np.asarray(s2, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"pauli_jordan_smooth: s2 must be finite, got {s2!r}")
    flat = arr.reshape(-1)
    out = np.zeros_like(flat)
    if m > 0:
        tl = flat >= 0
        x = m * np.sqrt(flat[tl])
        ratio = np.full_like(x, 0.5)          # J1(x)/x -> 1/2
        nz = x > 0
        if np.any(nz):
            ratio[nz] = bessel_j1(x[nz]) / x[nz]
        out[tl] = m * m * ratio / (8.0 * math.pi)
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def wightman_imag_kernel(s2, m: float):
    """Y1/K1 kernel of the Wightman function with its light-cone pole split off.

    The kernel is ``m Y1(m s)/(8 pi s)`` for time-like ``s2`` and
    ``m K1(m s)/(4 pi^2 s)`` for space-like ``s2``; it equals
    ``regular + pole_strength / s2`` with ``pole_strength = -1/(4 pi^2)`` on
    both sides.  The regular remainder is finite except for an integrable
    logarithm at the cone.  This is the real part of :func:`wightman_closed_form`.

    Returns
    -------
    regular : float or ndarray
    pole_strength : float

    Raises
    ------
    DomainError
        ``s2 == 0`` (the pole itself).
    """
    m = _check_mass(m)
    arr = np.asarray(s2, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"wightman_imag_kernel: s2 must be finite, got {s2!r}")
    if np.any(arr == 0):
        raise DomainError("wightman_imag_kernel: s2 = 0 is the light-cone pole; "
                          "route it through the principal-value integral")
    flat = arr.reshape(-1)
    out = np.zeros_like(flat)
    if m > 0:
        tl = flat > 0
        if np.any(tl):
            s = np.sqrt(flat[tl])
            out[tl] = m * y1_pole_free(m * s) / (8.0 * math.pi * s)
        sl = ~tl
        if np.any(sl):
            s = np.sqrt(-flat[sl])
            out[sl] = m * k1_pole_free(m * s) / (4.0 * math.pi ** 2 * s)
    if arr.ndim == 0:
        return float(out[0]), POLE_STRENGTH
    return out.reshape(arr.shape), POLE_STRENGTH


def wightman_closed_form(r: float, t: float, m: float) -> complex:
    """``W(r, t)`` from the Bessel closed forms; undefined on the light cone."""
    m = _check_mass(m)
    s2 = t * t - r * r
    if abs(t) == r:
        raise DomainError(f"wightman_closed_form: ({r}, {t}) lies on the light cone")
    if s2 > 0:
        s = math.sqrt(s2)
        if m == 0:
            return complex(POLE_STRENGTH / s2, 0.0)
        x = m * s
        return complex(m * bessel_y1(x), math.copysign(1.0, t) * m * bessel_j1(x)) / (8 * math.pi * s)
    s = math.sqrt(-s2)
    if m == 0:
        return complex(POLE_STRENGTH / s2, 0.0)
    return complex(m * bessel_k1(m * s) / (4 * math.pi ** 2 * s), 0.0)


def momentum_cutoff(m: float, eps: float, cfg: QuadratureConfig) -> float:
    """Upper momentum limit of a damped mode integral.

    Beyond ``m + 40/eps`` the factor ``exp(-eps omega)`` is below ``4e-18``;
    ``cfg.k_max`` caps the range.
    """
    return min(cfg.k_max, m + _DAMPING_DECADES / eps)


def _damped_wightman(r: float, t: float, m: float, eps: float, cfg: QuadratureConfig) -> complex:
    kmax = momentum_cutoff(m, eps, cfg)
    pref = 1.0 / (4.0 * math.pi ** 2 * r)

    def f(k):
        w = np.sqrt(k * k + m * m)
        w = np.where(w > 0, w, 1.0)
        ratio = np.where(k > 0, k / w, 0.0 if m > 0 else 1.0)
        return pref * ratio * np.sin(k * r) * np.exp(-1j * w * t - eps * w)

    return integrate_adaptive(f, 0.0, kmax, cfg, omega=r + abs(t)).value


def _richardson(values: list[complex]) -> complex:
    """Eliminate the O(eps), O(eps^2), ... terms of a halving sequence."""
    table = list(values)
    for level in range(1, len(table)):
        factor = 2.0 ** level
        table = [(factor * table[i + 1] - table[i]) / (factor - 1.0)
                 for i in range(len(table) - 1)]
    return table[0]


def wightman_momentum_oracle(p: IntervalPoint, m: float, cfg: QuadratureConfig, *,
                             extrapolate: bool = True, levels: int = 4) -> complex:
    """``W(r, t)`` from its damped momentum integral.

    The mode integral is evaluated with ``exp(-eps omega)`` damping.  Since
    damping is the shift ``t -> t - i eps``, the damped value is analytic in
    ``eps``; with ``extrapolate`` the values at ``eps0 * 2^-j`` for
    ``j < levels`` are combined by Richardson extrapolation to ``eps -> 0``.
    ``eps0`` is ``cfg.uv_damping``, reduced to an eighth of the distance of
    ``|t|`` from the cone when that is smaller.

    This is ground truth for tests; production code uses the closed forms.
    """
    m = _check_mass(m)
    if p.r <= 0:
        raise DomainError("wightman_momentum_oracle needs r > 0; "
                          "use vacuum_wightman_equal_point for r = 0")
    eps = cfg.uv_damping
    if eps <= 0:
        raise DomainError("wightman_momentum_oracle needs uv_damping > 0")
    if not extrapolate:
        return _damped_wightman(p.r, p.t, m, eps, cfg)
    gap = abs(abs(p.t) - p.r)
    if gap > 0:
        eps = min(eps, gap / 8.0)
    values = [_damped_wightman(p.r, p.t, m, eps * 0.5 ** j, cfg) for j in range(levels)]
    return _richardson(values)


def vacuum_wightman_equal_point(tau: float, m: float, cfg: QuadratureConfig) -> complex:
    """Damped ``<0|Phi(x, tau) Phi(x, 0)|0>`` at coincident spatial points.

    ``1/(4 pi^2) int_0^K dk k^2/omega exp(-i omega tau - eps omega)`` with
    ``eps = cfg.uv_damping`` and ``K`` from :func:`momentum_cutoff`.  Only
    the regularised value exists; ``eps = 0`` is rejected.
    """
    m = _check_mass(m)
    eps = cfg.uv_damping
    if eps <= 0:
        raise DomainError("vacuum_wightman_equal_point needs uv_damping > 0")
    kmax = momentum_cutoff(m, eps, cfg)
    pref = 1.0 / (4.0 * math.pi ** 2)

    def f(k):
        w = np.sqrt(k * k + m * m)
        ratio = np.where(w > 0, k * k / np.where(w > 0, w, 1.0), 0.0)
        return pref * ratio * np.exp(-1j * w * tau - eps * w)

    return integrate_adaptive(f, 0.0, kmax, cfg, omega=abs(tau)).value


def theta_frequency_split(tau: float, eps: float, cfg: QuadratureConfig):
    """Positive- and negative-frequency parts of the step function.

    ``theta_plus  = -1/(2 pi i) int_0^W      dw exp(-i w tau)/(w + i eps)``
    ``theta_minus = -1/(2 pi i) int_{-W}^0   dw exp(-i w tau)/(w + i eps)``

    with ``W = cfg.k_max``.  Their sum tends to ``Theta(tau)`` as
    ``eps -> 0`` and ``W -> inf``, yet each part alone is non-zero on both
    half-lines.

    Returns
    -------
    (theta_plus, theta_minus) : tuple of complex
    """
    if not eps > 0:
        raise DomainError(f"theta_frequency_split needs eps > 0, got {eps}")
    if tau == 0 or not math.isfinite(tau):
        raise DomainError(f"theta_frequency_split needs finite tau != 0, got {tau}")
    big = cfg.k_max
    n_cap = math.ceil(big * 4.0 * abs(tau) / math.pi)
    local = replace(cfg, max_panels=max(cfg.max_panels, n_cap + 20_000))
    pref = -1.0 / (2j * math.pi)

    def plus(w):
        return np.exp(-1j * w * tau) / (w + 1j * eps)

    def minus(w):                      # integrand at -w
        return np.exp(1j * w * tau) / (-w + 1j * eps)

    tp = pref * integrate_adaptive(plus, 0.0, big, local, omega=abs(tau)).value
    tm = pref * integrate_adaptive(minus, 0.0, big, local, omega=abs(tau)).value
    return tp, tm
