"""One-dimensional quadrature engines used by every response integral.

Three entry points share one configuration object:

* :func:`integrate_adaptive` - globally adaptive 7/15-point Gauss-Kronrod
  bisection, vectorised over panels, with an optional cap on panel width
  for integrands that oscillate at a known frequency;
* :func:`integrate_sqrt_endpoint` - integrands of the form ``f(u)/sqrt(u)``
  through the substitution ``u = w**2``;
* :func:`integrate_principal_value` - a regular part plus an explicit
  ``strength/u`` pole at the origin, with symmetric excision of the regular
  part and a built-in Richardson check on the excision width.

Integrands are called with a one-dimensional ``numpy`` array of abscissae
and must return an array of the same length (real or complex).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConvergenceError, DomainError, IntegrandError

__all__ = [
    "QuadratureConfig",
    "IntegralResult",
    "integrate_adaptive",
    "integrate_sqrt_endpoint",
    "integrate_principal_value",
]

Integrand = Callable[[np.ndarray], np.ndarray]

# Kronrod 15-point abscissae (non-negative half) and weights; the odd
# entries are the 7-point Gauss nodes.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_NODES = np.concatenate((-_XGK[:-1], _XGK[::-1]))            # 15 nodes, ascending
_KRONROD_W = np.concatenate((_WGK[:-1], _WGK[::-1]))
_GAUSS_W = np.zeros(15)
_GAUSS_W[1:14:2] = np.concatenate((_WG[:-1], _WG[::-1]))


@dataclass(frozen=True)
class QuadratureConfig:
    """Numerical controls shared by all integrals.

    Attributes
    ----------
    abs_tol, rel_tol : float
        Target accuracy; a result is accepted once its error estimate is
        below ``max(abs_tol, rel_tol * |value|)``.
    max_panels : int
        Hard limit on the number of Gauss-Kronrod panels per integral.
    pv_excision : float
        Half-width of the symmetric excision around a principal-value pole.
    uv_damping : float
        ``eps_uv`` in the ``exp(-eps_uv * omega)`` factor that regularises
        momentum integrals.
    k_max : float
        Momentum cutoff of the oracle integrals (also the frequency cutoff
        of the theta split).
    """

    abs_tol: float = 1e-12
    rel_tol: float = 1e-8
    max_panels: int = 200_000
    pv_excision: float = 1e-14
    uv_damping: float = 0.05
    k_max: float = 1e5

    def __post_init__(self):
        checks = (
            ("abs_tol", self.abs_tol > 0),
            ("rel_tol", self.rel_tol > 0),
            ("max_panels", self.max_panels >= 16),
            ("pv_excision", self.pv_excision > 0),
            ("uv_damping", self.uv_damping >= 0),
            ("k_max", self.k_max > 0),
        )
        for name, ok in checks:
            value = getattr(self, name)
            if not ok or not math.isfinite(value):
                raise DomainError(f"QuadratureConfig.{name} out of range: {value!r}")


@dataclass(frozen=True)
class IntegralResult:
    """Value of an integral with its error estimate.

    ``richardson_change`` is only set by :func:`integrate_principal_value`:
    the change of the value when the excision width is halved.
    """

    value: complex
    error_estimate: float
    panels_used: int
    richardson_change: Optional[float] = None


def _evaluate(f: Integrand, lo: np.ndarray, hi: np.ndarray):
    """Kronrod value and |Kronrod - Gauss| for each panel [lo, hi]."""
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center[:, None] + half[:, None] * _NODES[None, :]
    fx = np.asarray(f(x.ravel()))
    if fx.shape != (x.size,):
        fx = np.broadcast_to(fx, (x.size,))
    fx = fx.reshape(x.shape)
    bad = ~np.isfinite(fx)
    if np.any(bad):
        idx = np.flatnonzero(bad.ravel())[0]
        raise IntegrandError(float(x.ravel()[idx]), complex(fx.ravel()[idx]))
    kron = half * (fx @ _KRONROD_W)
    gauss = half * (fx @ _GAUSS_W)
    return kron, np.abs(kron - gauss)


def _ordered_sum(lo: np.ndarray, values: np.ndarray) -> complex:
    order = np.argsort(lo, kind="stable")
    v = values[order]
    return complex(math.fsum(np.real(v)), math.fsum(np.imag(v)))


def integrate_adaptive(f: Integrand, a: float, b: float, cfg: QuadratureConfig, *,
                       omega: Optional[float] = None) -> IntegralResult:
    """Integrate ``f`` over ``[a, b]`` by adaptive Gauss-Kronrod bisection.

    Parameters
    ----------
    f : callable
        Vectorised integrand, array in, array out.
    a, b : float
        Finite limits with ``a <= b``.
    cfg : QuadratureConfig
    omega : float, optional
        Dominant angular frequency of the integrand.  When given, no panel
        is wider than ``pi / (4 * omega)``.

    Returns
    -------
    IntegralResult

    Raises
    ------
    ConvergenceError
        ``max_panels`` reached first; carries the best estimate.
    IntegrandError
        ``f`` returned a non-finite value.

    Examples
    --------
    >>> r = integrate_adaptive(lambda u: u**2, 0.0, 1.0, QuadratureConfig())
    >>> round(r.value.real, 15)
    0.333333333333333
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"integration limits must be finite, got [{a}, {b}]")
    if a > b:
        raise DomainError(f"integration limits must satisfy a <= b, got [{a}, {b}]")
    if a == b:
        return IntegralResult(0j, 0.0, 0)

    n0 = 1
    if omega is not None and omega > 0:
        n0 = max(1, math.ceil((b - a) * 4.0 * omega / math.pi))
    if n0 > cfg.max_panels:
        raise ConvergenceError(
            f"oscillation cap needs {n0} panels, more than max_panels={cfg.max_panels}")
    edges = np.linspace(a, b, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    val, err = _evaluate(f, lo, hi)

    while True:
        total = _ordered_sum(lo, val)
        err_sum = math.fsum(err)
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if err_sum <= tol:
            return IntegralResult(total, err_sum, lo.size)

        # split the worst panels until the untouched remainder is below tol/2
        order = np.argsort(err, kind="stable")[::-1]
        remaining = err_sum - np.cumsum(err[order])
        n_split = int(np.searchsorted(-remaining, -0.5 * tol)) + 1
        n_split = min(n_split, order.size)
        pick = order[:n_split]
        if lo.size + n_split > cfg.max_panels:
            raise ConvergenceError(
                f"no convergence on [{a}, {b}] within {cfg.max_panels} panels "
                f"(error estimate {err_sum:.3e}, target {tol:.3e})",
                best_estimate=total, error_estimate=err_sum)
        p_lo, p_hi = lo[pick], hi[pick]
        mid = 0.5 * (p_lo + p_hi)
        if np.any((mid <= p_lo) | (mid >= p_hi)):
            raise ConvergenceError(
                f"panels on [{a}, {b}] reached machine resolution "
                f"(error estimate {err_sum:.3e}, target {tol:.3e})",
                best_estimate=total, error_estimate=err_sum)
        keep = np.ones(lo.size, dtype=bool)
        keep[pick] = False
        new_lo = np.concatenate((p_lo, mid))
        new_hi = np.concatenate((mid, p_hi))
        new_val, new_err = _evaluate(f, new_lo, new_hi)
        lo = np.concatenate((lo[keep], new_lo))
        hi = np.concatenate((hi[keep], new_hi))
        val = np.concatenate((val[keep], new_val))
        err = np.concatenate((err[keep], new_err))


def integrate_sqrt_endpoint(f_smooth: Integrand, a: float, b: float, cfg: QuadratureConfig, *,
                            omega: Optional[float] = None) -> IntegralResult:
    """Integrate ``f_smooth(u) / sqrt(u)`` over ``[a, b]`` with ``0 <= a <= b``.

    The substitution ``u = w**2`` turns the integrand into the smooth
    ``2 f_smooth(w**2)`` on ``[sqrt(a), sqrt(b)]``.

    Examples
    --------
    >>> r = integrate_sqrt_endpoint(lambda u: np.ones_like(u), 0.0, 1.0, QuadratureConfig())
    >>> round(r.value.real, 12)
    2.0
    """
    if a < 0:
        raise DomainError(f"integrate_sqrt_endpoint needs a >= 0, got {a}")
    if a > b:
        raise DomainError(f"integration limits must satisfy a <= b, got [{a}, {b}]")

    def g(w):
        return 2.0 * np.asarray(f_smooth(w * w))

    return integrate_adaptive(g, math.sqrt(a), math.sqrt(b), cfg, omega=omega)


def integrate_principal_value(f_reg: Integrand, a: float, b: float, strength: complex,
                              cfg: QuadratureConfig, *,
                              omega: Optional[float] = None) -> IntegralResult:
    """Principal value of ``f_reg(u) + strength / u`` over ``[a, b]``, ``a < 0 < b``.

    The pole contributes ``strength * ln(b / |a|)`` exactly.  The regular
    part must be bounded at the origin; it is integrated on
    ``[a, -d] U [d, b]`` with ``d = cfg.pv_excision`` through the
    square-root endpoint engine, and the slices ``[-d, -d/2]`` and
    ``[d/2, d]`` are added as a Richardson check.  The returned value is the
    one at excision ``d/2``.

    Raises
    ------
    ConvergenceError
        The Richardson change exceeds ``max(rel_tol * |value|, abs_tol)``.

    Examples
    --------
    >>> zero = lambda u: np.zeros_like(u)
    >>> r = integrate_principal_value(zero, -1.0, 2.0, 1.0, QuadratureConfig())
    >>> round(r.value.real, 15)
    0.693147180559945
    """
    if not (a < 0.0 < b):
        raise DomainError(f"principal value needs a < 0 < b, got [{a}, {b}]")
    d = cfg.pv_excision
    if d >= min(-a, b):
        raise DomainError(f"pv_excision {d} does not fit inside [{a}, {b}]")

    def right(v):
        return np.sqrt(v) * np.asarray(f_reg(v))

    def left(v):
        return np.sqrt(v) * np.asarray(f_reg(-v))

    r_side = integrate_sqrt_endpoint(right, d, b, cfg, omega=omega)
    l_side = integrate_sqrt_endpoint(left, d, -a, cfg, omega=omega)
    r_inc = integrate_sqrt_endpoint(right, 0.5 * d, d, cfg)
    l_inc = integrate_sqrt_endpoint(left, 0.5 * d, d, cfg)

    pole = complex(strength) * math.log(b / -a)
    change = r_inc.value + l_inc.value
    value = r_side.value + l_side.value + change + pole
    error = (r_side.error_estimate + l_side.error_estimate
             + r_inc.error_estimate + l_inc.error_estimate + abs(change))
    panels = r_side.panels_used + l_side.panels_used + r_inc.panels_used + l_inc.panels_used
    limit = max(cfg.rel_tol * abs(value), cfg.abs_tol)
    if abs(change) > limit:
        raise ConvergenceError(
            f"principal value unstable under halving the excision: change {abs(change):.3e} "
            f"exceeds {limit:.3e}", best_estimate=value, error_estimate=error)
    return IntegralResult(value, error, panels, richardson_change=abs(change))
