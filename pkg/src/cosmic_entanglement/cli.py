"""Command-line front end.

::

    cosmic-entanglement coefficients --config FILE [--out FILE]
    cosmic-entanglement evolve --config FILE --out FILE
    cosmic-entanglement sweep --config FILE --outdir DIR
    cosmic-entanglement figures --id ID --outdir DIR

Every config key can be overridden by a flag of the same name.  Exit codes:
0 success, 2 config error, 3 convergence error, 4 physicality violation.
"""

import argparse
import logging
import os
import sys
from functools import partial

from . import runner
from .config import KEYS, Scenario, load_scenario
from .dynamics import EvolutionSettings
from .errors import ConfigError, CosmicEntanglementError
from .figures import FIGURES, figure_curves
from .response import SummationControl


def _add_common(p, with_config=True):
    if with_config:
        p.add_argument("--config", help="scenario file (key = value lines)")
        for key in KEYS:
            if key in ("term_tol", "quad_tol"):
                continue
            names = {f"--{key}", f"--{key.replace('_', '-')}"}
            p.add_argument(*sorted(names), dest=f"set_{key}", metavar="VALUE",
                           help=argparse.SUPPRESS)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--quad-tol", "--quad_tol", dest="set_quad_tol", metavar="X")
    p.add_argument("--term-tol", "--term_tol", dest="set_term_tol", metavar="X")


def build_parser():
    parser = argparse.ArgumentParser(prog="cosmic-entanglement", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coefficients", help="tabulate response tensors and A, B, C")
    _add_common(p)
    p.add_argument("--out", help="output CSV (default: stdout)")

    p = sub.add_parser("evolve", help="entanglement trajectory for one scenario")
    _add_common(p)
    p.add_argument("--out", required=True)

    p = sub.add_parser("sweep", help="one trajectory per sweep value plus a coefficient table")
    _add_common(p)
    p.add_argument("--outdir", required=True)

    p = sub.add_parser("figures", help="curve families reproducing a figure")
    _add_common(p, with_config=False)
    p.add_argument("--id", required=True, choices=sorted(FIGURES))
    p.add_argument("--outdir", required=True)
    p.add_argument("--t_max", "--t-max", dest="t_max", type=float, default=30.0)
    p.add_argument("--dt", type=float, default=0.005)
    return parser


def _overrides(args):
    return {k[4:]: v for k, v in vars(args).items() if k.startswith("set_") and v is not None}


def _scenario(args):
    if args.config is None and not {"nu", "omega_r", "omega_L"} <= set(_overrides(args)):
        raise ConfigError("give --config or all of --nu, --omega_r, --omega_L")
    return load_scenario(args.config, _overrides(args))


def _numerics(args):
    over = _overrides(args)
    try:
        kw = {k: float(over[k]) for k in ("quad_tol", "term_tol") if k in over}
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return SummationControl(**kw)


def cmd_coefficients(args):
    scenario = _scenario(args)
    rows = runner.parallel_map(runner.coefficient_row, scenario.points(), args.jobs)
    text = runner.csv_text(runner.COEFFICIENT_COLUMNS, rows)
    if args.out:
        runner.write_text(args.out, text)
    else:
        sys.stdout.write(text)


def _point_name(i, param, value):
    return f"{i:03d}_{param}_{value:g}"


def cmd_evolve(args):
    scenario = _scenario(args)
    if scenario.sweep is None:
        rows = runner.trajectory_rows(scenario)
        runner.write_text(args.out, runner.csv_text(runner.TRAJECTORY_COLUMNS, rows))
        return
    # one file per sweep point: OUT_000_nu_2.csv, ...
    stem, ext = os.path.splitext(args.out)
    points = scenario.points()
    results = runner.parallel_map(runner.trajectory_rows, points, args.jobs)
    param = scenario.sweep.param
    for i, (point, rows) in enumerate(zip(points, results)):
        name = _point_name(i, param, getattr(point.geometry, param))
        runner.write_text(f"{stem}_{name}{ext or '.csv'}",
                          runner.csv_text(runner.TRAJECTORY_COLUMNS, rows))


def _sweep_point(scenario):
    return runner.coefficient_row(scenario), runner.trajectory_rows(scenario)


def cmd_sweep(args):
    scenario = _scenario(args)
    if scenario.sweep is None:
        raise ConfigError("sweep needs sweep_param and sweep_values")
    os.makedirs(args.outdir, exist_ok=True)
    points = scenario.points()
    results = runner.parallel_map(_sweep_point, points, args.jobs)
    param = scenario.sweep.param
    table = []
    for i, (point, (row, traj)) in enumerate(zip(points, results)):
        name = f"evolve_{_point_name(i, param, getattr(point.geometry, param))}.csv"
        runner.write_text(os.path.join(args.outdir, name),
                          runner.csv_text(runner.TRAJECTORY_COLUMNS, traj))
        table.append(row)
    runner.write_text(os.path.join(args.outdir, "coefficients.csv"),
                      runner.csv_text(runner.COEFFICIENT_COLUMNS, table))


def _figure_curve(curve, settings, ctl):
    k = curve.coefficients(ctl)
    scenario = Scenario(curve.geometry, curve.dipoles, evolution=settings, numerics=ctl)
    return k, runner.trajectory_rows(scenario, k)


def cmd_figures(args):
    settings = EvolutionSettings(t_max=args.t_max, dt=args.dt, method="exact")
    ctl = _numerics(args)
    curves = figure_curves(args.id)
    os.makedirs(args.outdir, exist_ok=True)
    results = runner.parallel_map(partial(_figure_curve, settings=settings, ctl=ctl),
                                  curves, args.jobs)
    index = ["label,spacetime,dipoles,nu,omega_r,omega_L,A,B,C"]
    for curve, (k, rows) in zip(curves, results):
        runner.write_text(os.path.join(args.outdir, f"fig{args.id}_{curve.label}.csv"),
                          runner.csv_text(runner.TRAJECTORY_COLUMNS, rows))
        g = curve.geometry
        space = "minkowski" if curve.minkowski else "cosmic_string"
        nums = ",".join(runner.fmt(v) for v in (g.nu, g.omega_r, g.omega_L, k.A, k.B, k.C))
        index.append(f"{curve.label},{space},{curve.dipole_label},{nums}")
    runner.write_text(os.path.join(args.outdir, f"fig{args.id}_index.csv"), "\n".join(index) + "\n")


COMMANDS = {
    "coefficients": cmd_coefficients,
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
    "figures": cmd_figures,
}


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.jobs is not None and args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return ConfigError.exit_code
    try:
        COMMANDS[args.command](args)
    except CosmicEntanglementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
