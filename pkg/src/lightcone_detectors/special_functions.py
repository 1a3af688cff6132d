"""Cylinder functions of order 0 and 1 for real arguments.

Only what the propagator kernels need: J0, J1, Y0, Y1 (Neumann), K0, K1
(Macdonald), plus pole-free variants of Y1 and K1 that subtract the
``-2/(pi x)`` and ``1/x`` small-argument poles without cancellation.

All functions accept scalars or arrays and return the same shape.

Evaluation regimes
------------------
J, Y
    ascending power series for ``x < 8``; Miller backward recurrence with
    the Neumann expansion of Y for ``8 <= x < 25``; Hankel asymptotic
    expansion for ``x >= 25`` (truncation error below ``exp(-2x)``).
K
    ascending series for ``x < 2``; Steed's continued fraction (CF2) for
    ``x >= 2``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "bessel_j0",
    "bessel_j1",
    "bessel_y0",
    "bessel_y1",
    "bessel_k0",
    "bessel_k1",
    "y1_pole_free",
    "k1_pole_free",
]

_EULER_GAMMA = 0.57721566490153286061
_SERIES_MAX = 8.0
_HANKEL_MIN = 25.0
_K_SERIES_MAX = 2.0
_N_SERIES = 40
_MILLER_START = 100
_N_HANKEL = 30

# harmonic numbers H_k, k = 0.._N_SERIES + 1
_HARMONIC = np.concatenate(([0.0], np.cumsum(1.0 / np.arange(1, _N_SERIES + 2))))


def _as_array(x, *, positive: bool, name: str):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name}: argument must be finite, got {x!r}")
    if positive:
        if np.any(arr <= 0.0):
            raise DomainError(f"{name}: argument must be > 0, got {x!r}")
    elif np.any(arr < 0.0):
        raise DomainError(f"{name}: argument must be >= 0, got {x!r}")
    return arr


def _out(values: np.ndarray, like):
    if np.ndim(like) == 0:
        return float(values.reshape(()))
    return values


# ---------------------------------------------------------------------------
# ascending series, x < 8

def _series_j(x: np.ndarray):
    """Return (J0, J1) from the ascending series."""
    q = 0.25 * x * x
    t0 = np.ones_like(x)
    t1 = np.ones_like(x)
    s0 = t0.copy()
    s1 = t1.copy()
    for k in range(1, _N_SERIES):
        t0 = t0 * (-q) / (k * k)
        t1 = t1 * (-q) / (k * (k + 1))
        s0 += t0
        s1 += t1
    return s0, 0.5 * x * s1


def _series_y_pole_free(x: np.ndarray, j0: np.ndarray, j1: np.ndarray):
    """Return (Y0, Y1 + 2/(pi x)) from the ascending series with log terms."""
    q = 0.25 * x * x
    log_half = np.log(0.5 * x)
    # Y0 = 2/pi (ln(x/2) + gamma) J0 + 2/pi sum_{k>=1} (-1)^{k+1} H_k q^k/(k!)^2
    t = np.ones_like(x)
    acc0 = np.zeros_like(x)
    # Y1 tail: -(x/2pi) sum_k (psi(k+1) + psi(k+2)) (-q)^k / (k!(k+1)!)
    u = np.ones_like(x)
    acc1 = (_HARMONIC[0] + _HARMONIC[1] - 2 * _EULER_GAMMA) * u
    for k in range(1, _N_SERIES):
        t = t * (-q) / (k * k)
        acc0 -= _HARMONIC[k] * t
        u = u * (-q) / (k * (k + 1))
        acc1 += (_HARMONIC[k] + _HARMONIC[k + 1] - 2 * _EULER_GAMMA) * u
    y0 = (2 / math.pi) * ((log_half + _EULER_GAMMA) * j0 + acc0)
    y1pf = (2 / math.pi) * log_half * j1 - x / (2 * math.pi) * acc1
    return y0, y1pf


# ---------------------------------------------------------------------------
# Miller backward recurrence, 8 <= x < 25

def _miller(x: np.ndarray):
    """Return (J0, J1, Y0, Y1) by backward recurrence and Neumann series.

    ``x`` must be one-dimensional.
    """
    n = _MILLER_START
    j = np.zeros((n + 2,) + x.shape)
    j[n] = 1e-30
    inv_x = 1.0 / x
    for k in range(n, 0, -1):
        j[k - 1] = 2.0 * k * inv_x * j[k] - j[k + 1]
    norm = j[0] + 2.0 * j[2::2].sum(axis=0)
    j /= norm
    k = np.arange(1, n // 2)
    sign = np.where(k % 2 == 0, 1.0, -1.0)[:, None]
    kk = k[:, None].astype(float)
    log_half = np.log(0.5 * x)
    y0 = (2 / math.pi) * (log_half + _EULER_GAMMA) * j[0] \
        - (4 / math.pi) * (sign * j[2 * k] / kk).sum(axis=0)
    # Neumann expansion of Y1 in odd-order J; psi(2) = 1 - gamma
    y1 = -(2 / (math.pi * x)) * j[0] \
        + (2 / math.pi) * (log_half - 1.0 + _EULER_GAMMA) * j[1] \
        - (2 / math.pi) * (sign * (2 * kk + 1) * j[2 * k + 1] / (kk * (kk + 1))).sum(axis=0)
    return j[0], j[1], y0, y1


# ---------------------------------------------------------------------------
# Hankel asymptotic expansion, x >= 25

def _hankel(x: np.ndarray, order: int):
    mu = 4.0 * order * order
    term = np.ones_like(x)
    p = np.ones_like(x)
    q = np.zeros_like(x)
    inv8x = 1.0 / (8.0 * x)
    for k in range(1, _N_HANKEL):
        term = term * (mu - (2 * k - 1) ** 2) * inv8x / k
        if k % 2:
            q += term if (k // 2) % 2 == 0 else -term
        else:
            p += term if (k // 2) % 2 == 0 else -term
    chi = x - (0.5 * order + 0.25) * math.pi
    amp = np.sqrt(2.0 / (math.pi * x))
    c, s = np.cos(chi), np.sin(chi)
    return amp * (p * c - q * s), amp * (p * s + q * c)


def _cylinder(x: np.ndarray):
    """Evaluate (J0, J1, Y0, Y1 + 2/(pi x)) on a positive array."""
    j0 = np.empty_like(x)
    j1 = np.empty_like(x)
    y0 = np.empty_like(x)
    y1pf = np.empty_like(x)

    small = x < _SERIES_MAX
    if np.any(small):
        xs = x[small]
        a0, a1 = _series_j(xs)
        b0, b1 = _series_y_pole_free(xs, a0, a1)
        j0[small], j1[small], y0[small], y1pf[small] = a0, a1, b0, b1

    mid = (x >= _SERIES_MAX) & (x < _HANKEL_MIN)
    if np.any(mid):
        xm = x[mid]
        a0, a1, b0, b1 = _miller(xm)
        j0[mid], j1[mid], y0[mid] = a0, a1, b0
        y1pf[mid] = b1 + 2.0 / (math.pi * xm)

    big = x >= _HANKEL_MIN
    if np.any(big):
        xb = x[big]
        a0, b0 = _hankel(xb, 0)
        a1, b1 = _hankel(xb, 1)
        j0[big], j1[big], y0[big] = a0, a1, b0
        y1pf[big] = b1 + 2.0 / (math.pi * xb)
    return j0, j1, y0, y1pf


def bessel_j0(x):
    """Bessel function of the first kind, order 0, for ``x >= 0``."""
    arr = _as_array(x, positive=False, name="bessel_j0")
    flat = arr.reshape(-1)
    out = np.ones_like(flat)
    nz = flat > 0
    if np.any(nz):
        out[nz] = _cylinder(flat[nz])[0]
    return _out(out.reshape(arr.shape), x)


def bessel_j1(x):
    """Bessel function of the first kind, order 1, for ``x >= 0``.

    >>> round(bessel_j1(1.0), 12)
    0.440050585745
    """
    arr = _as_array(x, positive=False, name="bessel_j1")
    flat = arr.reshape(-1)
    out = np.zeros_like(flat)
    nz = flat > 0
    if np.any(nz):
        out[nz] = _cylinder(flat[nz])[1]
    return _out(out.reshape(arr.shape), x)


def bessel_y0(x):
    """Neumann function of order 0 for ``x > 0``."""
    arr = _as_array(x, positive=True, name="bessel_y0")
    return _out(_cylinder(arr.reshape(-1))[2].reshape(arr.shape), x)


def bessel_y1(x):
    """Neumann function ``Y1 = N1`` for ``x > 0``; diverges like ``-2/(pi x)``."""
    arr = _as_array(x, positive=True, name="bessel_y1")
    flat = arr.reshape(-1)
    y1 = _cylinder(flat)[3] - 2.0 / (math.pi * flat)
    return _out(y1.reshape(arr.shape), x)


def y1_pole_free(x):
    """``Y1(x) + 2/(pi x)``, finite as ``x -> 0+`` (behaves like ``x ln x / pi``)."""
    arr = _as_array(x, positive=True, name="y1_pole_free")
    return _out(_cylinder(arr.reshape(-1))[3].reshape(arr.shape), x)


# ---------------------------------------------------------------------------
# modified Bessel K

def _k_series_pole_free(x: np.ndarray):
    """Return (K0, K1 - 1/x) from the ascending series, x < 2."""
    q = 0.25 * x * x
    log_half = np.log(0.5 * x)
    t = np.ones_like(x)          # q^k/(k!)^2
    u = np.ones_like(x)          # q^k/(k!(k+1)!)
    i0 = t.copy()
    i1s = u.copy()
    acc0 = (_HARMONIC[0] - _EULER_GAMMA) * t
    acc1 = (_HARMONIC[0] + _HARMONIC[1] - 2 * _EULER_GAMMA) * u
    for k in range(1, _N_SERIES):
        t = t * q / (k * k)
        u = u * q / (k * (k + 1))
        i0 += t
        i1s += u
        acc0 += (_HARMONIC[k] - _EULER_GAMMA) * t
        acc1 += (_HARMONIC[k] + _HARMONIC[k + 1] - 2 * _EULER_GAMMA) * u
    i1 = 0.5 * x * i1s
    k0 = -log_half * i0 + acc0
    k1pf = log_half * i1 - 0.25 * x * acc1
    return k0, k1pf


def _k_steed(x: np.ndarray):
    """Return (K0, K1) from Steed's CF2 (Temme normalisation), x >= 2."""
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = d.copy()
    delh = d.copy()
    q1 = np.zeros_like(x)
    q2 = np.ones_like(x)
    a1 = 0.25
    q = np.full_like(x, a1)
    c = np.full_like(x, a1)
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 2000):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q = q + c * qnew
        b = b + 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h = h + delh
        dels = q * delh
        s = s + dels
        if np.all(np.abs(dels) < 1e-17 * np.abs(s)):
            break
    h = a1 * h
    k0 = np.sqrt(math.pi / (2.0 * x)) * np.exp(-x) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1


def _modified(x: np.ndarray):
    """Evaluate (K0, K1 - 1/x) on a positive array."""
    k0 = np.empty_like(x)
    k1pf = np.empty_like(x)
    small = x < _K_SERIES_MAX
    if np.any(small):
        k0[small], k1pf[small] = _k_series_pole_free(x[small])
    if np.any(~small):
        xb = x[~small]
        a, b = _k_steed(xb)
        k0[~small] = a
        k1pf[~small] = b - 1.0 / xb
    return k0, k1pf


def bessel_k0(x):
    """Macdonald function of order 0 for ``x > 0``."""
    arr = _as_array(x, positive=True, name="bessel_k0")
    return _out(_modified(arr.reshape(-1))[0].reshape(arr.shape), x)


def bessel_k1(x):
    """Macdonald function ``K1`` for ``x > 0``: positive, decreasing, ``x K1(x) -> 1``."""
    arr = _as_array(x, positive=True, name="bessel_k1")
    flat = arr.reshape(-1)
    large = flat >= _K_SERIES_MAX
    out = np.empty_like(flat)
    if np.any(large):
        out[large] = _k_steed(flat[large])[1]
    if np.any(~large):
        xs = flat[~large]
        out[~large] = _k_series_pole_free(xs)[1] + 1.0 / xs
    return _out(out.reshape(arr.shape), x)


def k1_pole_free(x):
    """``K1(x) - 1/x``, finite as ``x -> 0+`` (behaves like ``(x/2) ln x``)."""
    arr = _as_array(x, positive=True, name="k1_pole_free")
    return _out(_modified(arr.reshape(-1))[1].reshape(arr.shape), x)
