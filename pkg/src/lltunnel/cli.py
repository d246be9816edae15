"""Command line front end: ``tunnel run|sweep|preset|validate``."""

import argparse
import json
import math
import sys

from . import __version__
from .engines import ALL_ENGINES, Engine
from .errors import TunnelError
from .kinematics import PhysicalScenario
from .matching import Model
from .sweep import PRESETS, SweepSpec, Variable, emit, evaluate, preset, run_sweep, validate

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _add_scenario_flags(p, required=True):
    p.add_argument("--E-meV", dest="E", type=float, required=required, help="incident energy (meV)")
    p.add_argument("--V0-meV", dest="V0", type=float, required=required, help="barrier height (meV)")
    p.add_argument("--d-nm", dest="d", type=float, required=required, help="barrier width (nm)")
    p.add_argument("--phi-rad", dest="phi", type=float, default=0.0 if not required else None,
                   required=required, help="incidence angle (rad)")
    p.add_argument("--mass-me", dest="mass", type=float, default=1.0, help="mass in free electron masses")
    p.add_argument("--vfermi", type=float, default=1e6, help="Fermi velocity (m/s)")
    p.add_argument("--model", choices=["2x2", "4x4"], default="4x4")
    p.add_argument("--rep", choices=["a", "b"], default="a", help="4x4 representation")
    p.add_argument("--engine", choices=[e.value for e in Engine] + ["all"], default="all")


def build_parser():
    parser = argparse.ArgumentParser(prog="tunnel", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="coefficients for a single scenario")
    _add_scenario_flags(run)
    run.add_argument("--json", action="store_true", help="print JSON instead of a table")

    sw = sub.add_parser("sweep", help="sweep one variable")
    sw.add_argument("--var", choices=[v.value for v in Variable], required=True)
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--points", type=int, required=True)
    _add_scenario_flags(sw, required=False)
    sw.add_argument("--out", required=True)
    sw.add_argument("--format", choices=["csv", "json"], default="csv")

    pr = sub.add_parser("preset", help="reproduce a figure's data")
    pr.add_argument("name", choices=PRESETS)
    pr.add_argument("--out", required=True)
    pr.add_argument("--format", choices=["csv", "json"], default=None,
                    help="defaults to the extension of --out, else csv")
    pr.add_argument("--mass-me", dest="mass", type=float, default=None)
    pr.add_argument("--vfermi", type=float, default=None)

    va = sub.add_parser("validate", help="run the invariant report on a random grid")
    va.add_argument("--grid-points", type=int, default=200)
    va.add_argument("--seed", type=int, default=42)
    va.add_argument("--json", action="store_true", help="print the report as JSON")
    return parser


def _engines(name):
    return ALL_ENGINES if name == "all" else (Engine(name),)


def _rep(args):
    return "2x2" if args.model == "2x2" else args.rep


def _scenario(args, **overrides):
    values = dict(energy_E=args.E, barrier_V0=args.V0, width_d=args.d, angle_phi=args.phi,
                  mass_m=args.mass, fermi_velocity_v=args.vfermi)
    values.update(overrides)
    missing = [k for k, v in values.items() if v is None]
    if missing:
        raise UsageError(f"missing scenario values: {', '.join(missing)}")
    try:
        return PhysicalScenario(**values)
    except (ValueError, TunnelError) as exc:
        raise UsageError(str(exc)) from exc


def _cmd_run(args, out):
    scenario = _scenario(args)
    rows = [evaluate(scenario, e, Model(args.model), _rep(args)) for e in _engines(args.engine)]
    if args.json:
        recs = [
            {"engine": r.engine.value, "rep": r.rep, "T1": r.T1, "T2": r.T2, "R1": r.R1, "R2": r.R2,
             "unitarity_resid": r.unitarity_resid, "cond": r.cond, "status": r.status}
            for r in rows
        ]
        recs = [{k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in r.items()} for r in recs]
        print(json.dumps(recs, indent=2), file=out)
    else:
        print(f"{'engine':<12} {'T1':>12} {'T2':>12} {'R1':>12} {'R2':>12} {'resid':>10}  status", file=out)
        for r in rows:
            print(
                f"{r.engine.value:<12} {r.T1:12.9f} {r.T2:12.9f} {r.R1:12.9f} {r.R2:12.9f}"
                f" {r.unitarity_resid:10.2e}  {r.status}",
                file=out,
            )
    return EXIT_OK if all(r.ok for r in rows) else EXIT_VALIDATION


def _cmd_sweep(args, out):
    var = Variable(args.var)
    # the swept field needs no flag; seed it with the range start
    fixed = _scenario(args, **{var.field: args.start})
    try:
        spec = SweepSpec(var, args.start, args.stop, args.points, fixed, Model(args.model), _rep(args),
                         _engines(args.engine))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = run_sweep(spec)
    path = emit(result, args.format, args.out)
    print(f"wrote {len(result.rows)} rows to {path}", file=out)
    return EXIT_OK


def _cmd_preset(args, out):
    fmt = args.format or ("json" if str(args.out).endswith(".json") else "csv")
    result = run_sweep(preset(args.name, mass_m=args.mass, fermi_velocity=args.vfermi))
    path = emit(result, fmt, args.out)
    print(f"wrote {len(result.rows)} rows to {path}", file=out)
    return EXIT_OK


def _cmd_validate(args, out):
    if args.grid_points < 1:
        raise UsageError("--grid-points must be positive")
    report = validate(args.grid_points, args.seed)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2), file=out)
    else:
        for c in report.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<40} worst={c.worst:.3e}  tol={c.tol:.0e}", file=out)
        print(f"{'PASSED' if report.passed else 'FAILED'} ({report.points} points, seed {report.seed}, "
              f"{report.seconds:.2f} s)", file=out)
    return EXIT_OK if report.passed else EXIT_VALIDATION


COMMANDS = {"run": _cmd_run, "sweep": _cmd_sweep, "preset": _cmd_preset, "validate": _cmd_validate}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"tunnel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"tunnel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
