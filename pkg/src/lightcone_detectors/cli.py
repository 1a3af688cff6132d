"""Command-line interface.

Subcommands::

    respond          detection probability for one scenario
    sweep            the same over one swept parameter
    frontscan        sharp-front signal and its Glauber precursor over time
    localization     Glauber or Newton-Wigner density over radius
    causality-scan   which detector models respond outside the light cone
    selftest         oracle-equivalence battery

Results go to standard output (or ``--out``) as CSV.  Exit status: 0 on
success, 2 for parse or validation errors, 3 for convergence failures,
4 when the self-test finds an inconsistency.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import Optional, Sequence

import numpy as np

from .csvio import emit_csv
from .errors import ConvergenceError, DetectorLabError, IntegrandError, InvariantViolation
from .experiments import (SWEEP_AXES, SweepSpec, breakdown_table, causality_scan,
                          frontscan_table, profile_table, run_detect, run_sweep)
from .localization import density_profile
from .scenario import DetectorKind, Scenario
from .scenario_file import DEFAULT_CONFIG, load_scenario
from .selftest import run_selftest

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONVERGENCE = 3
EXIT_INVARIANT = 4


def _common(parser: argparse.ArgumentParser):
    parser.add_argument("--scenario", metavar="PATH",
                        help="scenario file (default: the built-in benchmark scenario)")
    parser.add_argument("--eps-uv", type=float, dest="eps_uv",
                        help="UV damping eps_uv of the momentum integrals")
    parser.add_argument("--tol", type=float, help="relative tolerance of all integrals")
    parser.add_argument("--out", metavar="PATH", help="write CSV here instead of standard output")


def _grid(parser: argparse.ArgumentParser, start: float, stop: float, n: int):
    parser.add_argument("--from", dest="start", type=float, default=start)
    parser.add_argument("--to", dest="stop", type=float, default=stop)
    parser.add_argument("--n", type=int, default=n)
    parser.add_argument("--log", action="store_true", help="logarithmic spacing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightcone-detectors",
        description="Detector responses to a point source near its light cone.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("respond", help="response of one scenario")
    _common(p)
    p.add_argument("--detector", choices=("udd", "gd", "md", "all"))

    p = sub.add_parser("sweep", help="response over a swept parameter")
    _common(p)
    p.add_argument("--detector", choices=("udd", "gd", "md"))
    p.add_argument("--axis", choices=SWEEP_AXES, required=True)
    _grid(p, 0.5, 5.0, 10)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("frontscan", help="sharp-front signal over time")
    p.add_argument("--f0", type=float, default=1.0)
    p.add_argument("--dz", type=float, default=0.1)
    p.add_argument("--z", type=float, default=0.0)
    p.add_argument("--h", type=float, help="also compute the numerical Hilbert transform")
    p.add_argument("--out", metavar="PATH")
    _grid(p, -1.0, 0.5, 31)

    p = sub.add_parser("localization", help="localization density over radius")
    _common(p)
    p.add_argument("--observable", choices=("glauber", "newton-wigner", "nw"), default="glauber")
    p.add_argument("--time", type=float, default=2.0)
    _grid(p, 0.5, 6.0, 12)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("causality-scan", help="light-cone verdict per detector")
    _common(p)
    p.add_argument("--n", type=int, default=201)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("selftest", help="oracle-equivalence battery")
    p.add_argument("--eps-uv", type=float, dest="eps_uv")
    p.add_argument("--tol", type=float)
    return parser


def _setup(args):
    if getattr(args, "scenario", None):
        doc = load_scenario(args.scenario)
        scen, cfg, kind = doc.scenario, doc.config, doc.kind
    else:
        scen, cfg, kind = Scenario(), DEFAULT_CONFIG, None
    changes = {}
    if getattr(args, "eps_uv", None) is not None:
        changes["uv_damping"] = args.eps_uv
    if getattr(args, "tol", None) is not None:
        changes["rel_tol"] = args.tol
    if changes:
        cfg = dataclasses.replace(cfg, **changes)
    detector = getattr(args, "detector", None)
    if detector and detector != "all":
        kind = DetectorKind.parse(detector)
    return scen, cfg, kind or DetectorKind.UDD


def _values(args) -> np.ndarray:
    return SweepSpec("r", args.start, args.stop, args.n, "log" if args.log else "linear").values()


def _write(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run(args) -> int:
    if args.command == "selftest":
        _, cfg, _ = _setup(args)
        results = run_selftest(cfg)
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            print(f"{status}  {res.name:<36s} residual={res.residual:.3e}  tol={res.tolerance:.1e}")
        failed = [r.name for r in results if not r.passed]
        if failed:
            raise InvariantViolation("self-test failed: " + ", ".join(failed))
        return EXIT_OK

    if args.command == "frontscan":
        times = np.linspace(args.start, args.stop, args.n)
        _write(emit_csv(frontscan_table(args.f0, args.dz, args.z, times, args.h)), args.out)
        return EXIT_OK

    scen, cfg, kind = _setup(args)
    if args.command == "respond":
        kinds = list(DetectorKind) if args.detector == "all" else [kind]
        table = breakdown_table(run_detect(scen, k, cfg) for k in kinds)
    elif args.command == "sweep":
        sweep = SweepSpec(args.axis, args.start, args.stop, args.n, "log" if args.log else "linear")
        table = run_sweep(scen, kind, sweep, cfg, workers=args.workers)
    elif args.command == "localization":
        profile = density_profile(args.observable, args.time, _values(args), scen, cfg,
                                  workers=args.workers)
        table = profile_table(profile)
    else:
        report = causality_scan(scen, cfg, n=args.n, workers=args.workers)
        table = report.to_table()
        for entry in report.entries:
            print(f"{entry.kind.value}: {entry.verdict}", file=sys.stderr)
    _write(emit_csv(table), args.out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:                    # argparse usage errors
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return _run(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ConvergenceError, IntegrandError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (DetectorLabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
