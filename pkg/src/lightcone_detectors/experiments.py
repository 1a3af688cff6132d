"""Scenario-level drivers behind the command line: sweeps, scans and tables."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from .csvio import Table
from .errors import DetectorLabError, DomainError
from .free_field import FrontSignal, glauber_g, hilbert_numeric, im_v_analytic, mean_field, re_v, sample_front
from .localization import DensityProfile
from .quadrature import QuadratureConfig
from .response import ResponseBreakdown, detect
from .scenario import DetectorKind, Scenario

__all__ = [
    "SweepSpec",
    "run_detect",
    "run_sweep",
    "breakdown_table",
    "profile_table",
    "frontscan_table",
    "CausalityEntry",
    "CausalityReport",
    "causality_scan",
]

SWEEP_AXES = ("r", "t_f", "m", "omega_eg")
SWEEP_COLUMNS = ("probability", "vacuum_p1", "abs_p2", "abs_p3", "case", "on_cone", "error")


@dataclass(frozen=True)
class SweepSpec:
    """One-parameter sweep: ``n`` points from ``start`` to ``stop``."""

    axis: str
    start: float
    stop: float
    n: int
    scale: str = "linear"

    def __post_init__(self):
        if self.axis not in SWEEP_AXES:
            raise DomainError(f"sweep axis must be one of {SWEEP_AXES}, got {self.axis!r}")
        if self.scale not in ("linear", "log"):
            raise DomainError(f"sweep scale must be 'linear' or 'log', got {self.scale!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)) or not self.start < self.stop:
            raise DomainError(f"sweep needs start < stop, got {self.start}, {self.stop}")
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"sweep needs n >= 2 points, got {self.n}")
        if self.scale == "log" and self.start <= 0:
            raise DomainError("log sweep needs start > 0")

    def values(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, int(self.n))
        return np.linspace(self.start, self.stop, int(self.n))


def run_detect(scen: Scenario, kind, cfg: QuadratureConfig) -> ResponseBreakdown:
    """Single-scenario response; same as :func:`lightcone_detectors.response.detect`."""
    return detect(scen, kind, cfg)


def _substitute(scen: Scenario, axis: str, value: float) -> Scenario:
    return scen.replace(**{axis: float(value)})


def _sweep_row(args):
    scen, kind, cfg, axis, value = args
    try:
        b = detect(_substitute(scen, axis, value), kind, cfg)
    except DetectorLabError as exc:
        return (float(value), None, None, None, None, None, None, f"{type(exc).__name__}: {exc}")
    abs_p3 = None if b.amp_p3 is None else abs(b.amp_p3)
    return (float(value), b.probability, b.vacuum_p1, abs(b.amp_p2), abs_p3,
            b.case, b.on_cone, None)


def _ordered_map(func, items: Sequence, workers: int):
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, items))
    return [func(item) for item in items]


def run_sweep(scen: Scenario, kind, sweep: SweepSpec, cfg: QuadratureConfig, *,
              workers: int = 1) -> Table:
    """One row per sweep point, in sweep order.

    Each row is computed independently; a row whose scenario is invalid or
    whose integrals fail records the error in the ``error`` column and the
    sweep continues.
    """
    kind = DetectorKind.parse(kind)
    items = [(scen, kind, cfg, sweep.axis, v) for v in sweep.values()]
    rows = _ordered_map(_sweep_row, items, workers)
    return Table((sweep.axis,) + SWEEP_COLUMNS, tuple(rows))


def breakdown_table(breakdowns: Iterable[ResponseBreakdown]) -> Table:
    rows = tuple((b.detector, b.case, b.on_cone, b.probability, b.vacuum_p1,
                  complex(b.amp_p2), None if b.amp_p3 is None else complex(b.amp_p3),
                  b.epsilon_uv) for b in breakdowns)
    cols = ("detector", "case", "on_cone", "probability", "vacuum_p1", "amp_p2", "amp_p3",
            "epsilon_uv")
    return Table(cols, rows)


def profile_table(profile: DensityProfile) -> Table:
    rows = tuple((r, profile.t, value, r > profile.r_lightcone) for r, value in profile.points)
    return Table(("r", "t", profile.observable.value, "spacelike"), rows)


def frontscan_table(f0: float, dz: float, z: float, times: Iterable[float],
                    h: Optional[float] = None) -> Table:
    """Sharp-front signal over a grid of times at fixed ``z``.

    With ``h`` the numerical Hilbert transform on a cell grid of spacing
    ``h`` is added next to the closed form.  Times on a front edge get an
    error entry instead of values.
    """
    samples = t_start = None
    if h is not None:
        samples, t_start = sample_front(f0, dz, z, h)
    rows = []
    for t in times:
        sig = FrontSignal(f0, dz, z, float(t))
        try:
            im = im_v_analytic(sig)
            numeric = None if h is None else hilbert_numeric(samples, t_start, h, float(t))
            rows.append((float(t), re_v(sig), im, mean_field(sig), glauber_g(sig), numeric, None))
        except DomainError as exc:
            rows.append((float(t), re_v(sig), None, mean_field(sig), None, None, str(exc)))
    return Table(("t", "re_v", "im_v", "mean_field", "glauber_g", "im_v_numeric", "error"),
                 tuple(rows))


@dataclass(frozen=True)
class CausalityEntry:
    """Outcome of the radial scan for one detector model."""

    kind: DetectorKind
    r_lightcone: float
    boundary_r: Optional[float]
    grid_step: float
    floor: float
    interior_max: float
    failed_points: int
    verdict: str


@dataclass(frozen=True)
class CausalityReport:
    entries: Tuple[CausalityEntry, ...]

    def to_table(self) -> Table:
        rows = tuple((e.kind, e.r_lightcone, e.boundary_r, e.grid_step, e.floor,
                      e.interior_max, e.failed_points, e.verdict) for e in self.entries)
        return Table(("detector", "r_lightcone", "boundary_r", "grid_step", "floor",
                      "interior_max", "failed_points", "verdict"), rows)

    def verdict(self, kind) -> str:
        kind = DetectorKind.parse(kind)
        return next(e.verdict for e in self.entries if e.kind is kind)


def _source_response(b: ResponseBreakdown) -> float:
    if b.detector is DetectorKind.UDD:
        return b.probability - b.vacuum_p1
    return b.probability


def _scan_point(args):
    scen, kind, cfg, r = args
    try:
        return _source_response(detect(scen.replace(r=float(r)), kind, cfg))
    except DetectorLabError:
        return None


def causality_scan(scen: Scenario, cfg: QuadratureConfig, *, n: int = 201,
                   span: Tuple[float, float] = (0.5, 1.5), workers: int = 1,
                   floor_ratio: float = 1e-12) -> CausalityReport:
    """Scan the detector distance across the light-cone radius ``t_f - y0``.

    For each detector model the source-dependent response is evaluated on
    ``n`` radii spanning ``span`` times the light-cone radius.  The floor is
    ``floor_ratio`` times the largest response inside the cone; the
    boundary is the largest radius whose response exceeds it.  A detector
    is ``causal-gated`` when that boundary does not pass the cone and
    ``space-like-tail`` otherwise.  Points where the response is undefined
    (a window edge exactly on the cone) are skipped and counted.
    """
    r_c = scen.t_f - scen.y0
    if r_c <= 0:
        raise DomainError("causality scan needs t_f > y0 (the source must fire before t_f)")
    radii = np.linspace(span[0] * r_c, span[1] * r_c, int(n))
    step = float(radii[1] - radii[0])
    entries = []
    for kind in DetectorKind:
        values = _ordered_map(_scan_point, [(scen, kind, cfg, r) for r in radii], workers)
        inside = [v for r, v in zip(radii, values) if v is not None and r <= r_c]
        interior_max = max(inside) if inside else 0.0
        floor = floor_ratio * interior_max
        above = [float(r) for r, v in zip(radii, values) if v is not None and v > floor]
        boundary = max(above) if above else None
        gated = boundary is None or boundary <= r_c
        entries.append(CausalityEntry(kind, r_c, boundary, step, floor, interior_max,
                                      sum(v is None for v in values),
                                      "causal-gated" if gated else "space-like-tail"))
    return CausalityReport(tuple(entries))
