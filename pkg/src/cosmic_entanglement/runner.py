"""Scenario execution and CSV formatting shared by the CLI commands."""

import math
import os
from concurrent.futures import ProcessPoolExecutor

from .dynamics import STATE_ORDER, evolve, werner_state
from .errors import CosmicEntanglementError
from .kossakowski import coefficients_from_response
from .response import cross_response

COEFFICIENT_COLUMNS = (
    "nu", "omega_r", "omega_L", "f11", "f22", "f33", "g11", "g22", "g33", "g13", "A", "B", "C",
)
TRAJECTORY_COLUMNS = ("gamma_tau",) + STATE_ORDER + ("concurrence",)


def fmt(value):
    """Fixed-point decimal with 10 significant digits."""
    x = float(value)
    if x == 0 or not math.isfinite(x):
        return f"{x:.9f}"
    return f"{x:.{max(0, 9 - math.floor(math.log10(abs(x))))}f}"


def csv_text(header, rows):
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _annotate(exc, scenario):
    exc.args = (f"{exc.args[0] if exc.args else exc} [at {scenario.geometry}]",) + exc.args[1:]
    return exc


def coefficient_row(scenario):
    try:
        res = cross_response(scenario.geometry, scenario.numerics)
        k = coefficients_from_response(res, scenario.dipoles)
    except CosmicEntanglementError as exc:
        raise _annotate(exc, scenario)
    g = scenario.geometry
    return (g.nu, g.omega_r, g.omega_L) + res.as_tuple() + (k.A, k.B, k.C)


def trajectory_rows(scenario, k=None):
    """Rows of ``TRAJECTORY_COLUMNS`` for the Werner start of ``scenario``."""
    try:
        if k is None:
            res = cross_response(scenario.geometry, scenario.numerics)
            k = coefficients_from_response(res, scenario.dipoles)
        traj = evolve(werner_state(scenario.werner_p), k, scenario.evolution)
    except CosmicEntanglementError as exc:
        raise _annotate(exc, scenario)
    conc = traj.concurrence()
    return [(t,) + tuple(row) + (c,) for t, row, c in zip(traj.gamma_tau, traj.coefficients, conc)]


def default_jobs():
    return os.cpu_count() or 1


def parallel_map(func, items, jobs=None):
    """Order-preserving map; a pool is only spun up for more than one job."""
    items = list(items)
    jobs = jobs or default_jobs()
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(func, items))
