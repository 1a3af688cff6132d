"""Oracle-equivalence battery run by ``lightcone-detectors selftest``."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

from .free_field import FrontSignal, hilbert_numeric, im_v_analytic, sample_front
from .oracles import oracle_gd, oracle_udd
from .propagators import IntervalPoint, wightman_closed_form, wightman_momentum_oracle
from .quadrature import QuadratureConfig
from .response import amplitude_p2, detect
from .scenario import Scenario
from .special_functions import bessel_j0, bessel_j1, bessel_y0, bessel_y1

__all__ = ["CheckResult", "run_selftest"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.tolerance


def _rel(a, b) -> float:
    return abs(a - b) / abs(b)


def _wronskian() -> float:
    worst = 0.0
    for x in (0.1, 2.0, 7.9, 8.1, 24.9, 25.1, 50.0):
        j1, y1 = bessel_j1(x), bessel_y1(x)
        dj1, dy1 = bessel_j0(x) - j1 / x, bessel_y0(x) - y1 / x
        worst = max(worst, abs(j1 * dy1 - dj1 * y1 - 2.0 / (math.pi * x)))
    return worst


def _checks(cfg: QuadratureConfig) -> List[Tuple[str, Callable[[], float], float]]:
    bench = Scenario()
    spacelike = Scenario(x=(3.5, 0.0, 0.0))
    interior = Scenario(t_i=1.5, t_f=4.0)
    massless = Scenario(m=0.0)

    def p2_massless():
        closed = -2.0 * cmath.exp(1j * (massless.y0 + massless.r)) / (8 * math.pi * massless.r)
        return _rel(amplitude_p2(massless, cfg), closed)

    def hilbert():
        samples, t0 = sample_front(1.0, 0.1, 0.0, 1e-3)
        return abs(hilbert_numeric(samples, t0, 1e-3, -0.5)
                   - im_v_analytic(FrontSignal(1.0, 0.1, 0.0, -0.5)))

    return [
        ("bessel wronskian", _wronskian, 1e-10),
        ("wightman closed form vs modes",
         lambda: _rel(wightman_momentum_oracle(IntervalPoint(1.0, 3.0), 1.0, cfg),
                      wightman_closed_form(1.0, 3.0, 1.0)), 1e-3),
        ("udd source term vs oracle",
         lambda: _rel(detect(bench, "udd", cfg).probability - detect(bench, "udd", cfg).vacuum_p1,
                      oracle_udd(bench, cfg=cfg)), 1e-3),
        ("gd vs oracle (mixed window)",
         lambda: _rel(detect(bench, "gd", cfg).probability, oracle_gd(bench, cfg=cfg)), 1e-3),
        ("gd vs oracle (space-like window)",
         lambda: _rel(detect(spacelike, "gd", cfg).probability, oracle_gd(spacelike, cfg=cfg)), 1e-3),
        ("udd gate outside the cone",
         lambda: abs(detect(spacelike, "udd", cfg).probability
                     - detect(spacelike, "udd", cfg).vacuum_p1), 0.0),
        ("md gate outside the cone", lambda: detect(spacelike, "md", cfg).probability, 0.0),
        ("md equals gd inside the cone",
         lambda: abs(detect(interior, "md", cfg).probability - detect(interior, "gd", cfg).probability),
         1e-6),
        ("massless p2 closed form", p2_massless, 1e-12),
        ("hilbert transform of the front", hilbert, 1e-4),
    ]


def run_selftest(cfg: QuadratureConfig = QuadratureConfig()) -> List[CheckResult]:
    """Run every check; failures are reported, not raised."""
    results = []
    for name, func, tol in _checks(cfg):
        try:
            residual = float(func())
        except Exception:                       # a crashing check is a failed check
            residual = math.inf
        results.append(CheckResult(name, residual, tol))
    return results
