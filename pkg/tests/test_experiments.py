from __future__ import annotations

import pytest

from lightcone_detectors.errors import DomainError
from lightcone_detectors.experiments import SweepSpec, causality_scan, frontscan_table, run_sweep
from lightcone_detectors.quadrature import QuadratureConfig
from lightcone_detectors.response import detect
from lightcone_detectors.scenario import DetectorKind, Scenario

CFG = QuadratureConfig(rel_tol=1e-8, uv_damping=0.05)


def test_udd_sweep_drops_to_vacuum_beyond_cone():
    table = run_sweep(Scenario(), "udd", SweepSpec("r", 2.0, 4.0, 5), CFG)
    for r, prob, vac in zip(table.column("r"), table.column("probability"), table.column("vacuum_p1")):
        if r > 3.0:
            assert prob == vac
        elif r < 3.0:
            assert prob > vac


def test_gd_sweep_positive_and_decreasing_beyond_cone():
    table = run_sweep(Scenario(), "gd", SweepSpec("r", 3.2, 5.0, 5), CFG)
    probs = table.column("probability")
    assert all(p > 0 for p in probs)
    assert all(a > b for a, b in zip(probs, probs[1:]))


def test_two_point_sweep_has_two_rows():
    assert len(run_sweep(Scenario(), "md", SweepSpec("m", 0.5, 2.0, 2), CFG).rows) == 2


def test_sweep_rows_independent_of_execution_order():
    sweep = SweepSpec("omega_eg", 0.5, 2.0, 4, "log")
    serial = run_sweep(Scenario(), "gd", sweep, CFG)
    parallel = run_sweep(Scenario(), "gd", sweep, CFG, workers=3)
    assert serial == parallel


def test_sweep_records_per_row_errors():
    table = run_sweep(Scenario(), "gd", SweepSpec("r", 2.0, 4.0, 3), CFG)
    errors = table.column("error")
    assert errors[0] is None and errors[2] is None
    assert "DomainError" in errors[1]            # r = 3 puts t_f on the cone


def test_sweep_matches_single_detect():
    table = run_sweep(Scenario(), "udd", SweepSpec("t_f", 2.0, 3.0, 2), CFG)
    assert table.column("probability")[1] == detect(Scenario(), "udd", CFG).probability


@pytest.mark.parametrize("args", [("q", 0, 1, 3), ("r", 1, 0, 3), ("r", 0, 1, 1), ("m", 0, 1, 3, "log")])
def test_bad_sweep_specs(args):
    with pytest.raises(DomainError):
        SweepSpec(*args)


def test_frontscan_rows():
    table = frontscan_table(1.0, 0.1, 0.0, [-0.5, 0.0, 0.05], h=1e-3)
    im_v, numeric, error = table.column("im_v"), table.column("im_v_numeric"), table.column("error")
    assert abs(im_v[0] - numeric[0]) < 1e-4
    assert im_v[1] is None and "edge" in error[1]
    assert table.column("mean_field") == [0.0, 2.0, 2.0]


def test_causality_scan_verdicts():
    report = causality_scan(Scenario(), CFG, n=41)
    assert report.verdict("udd") == "causal-gated"
    assert report.verdict("gd") == "space-like-tail"
    assert report.verdict("md") == "causal-gated"


def test_udd_boundary_converges_to_cone_radius():
    steps = []
    for n in (21, 41, 81):
        entry = next(e for e in causality_scan(Scenario(), CFG, n=n).entries
                     if e.kind is DetectorKind.UDD)
        assert abs(entry.boundary_r - 3.0) <= entry.grid_step
        steps.append(entry.grid_step)
    assert steps[2] == pytest.approx(steps[0] / 4)
