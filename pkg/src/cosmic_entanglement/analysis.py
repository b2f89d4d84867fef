"""Derived quantities of entanglement trajectories."""

import math

import numpy as np
from scipy.optimize import brentq

from .dynamics import EvolutionSettings, evolve, state_at
from .entanglement import concurrence_array


def _margin(init, k, t):
    return float(concurrence_array(state_at(init, k, t).as_array(), clip=False))


def first_death_time(init, k, t_max=30.0, dt=0.005):
    """First ``Gamma*tau`` at which the concurrence reaches zero.

    The crossing is bracketed on a ``dt`` grid and then refined with Brent's
    method on ``max(F1, F2)``.  Returns ``math.inf`` if the state stays
    entangled up to ``t_max`` and ``0.0`` if it starts separable.
    """
    traj = evolve(init, k, EvolutionSettings(t_max=t_max, dt=dt, method="exact"))
    margin = concurrence_array(traj.coefficients, clip=False)
    dead = np.flatnonzero(margin <= 0)
    if dead.size == 0:
        return math.inf
    i = dead[0]
    if i == 0:
        return 0.0
    lo, hi = traj.gamma_tau[i - 1], traj.gamma_tau[i]
    if margin[i] == 0:
        return float(hi)
    return brentq(lambda t: _margin(init, k, t), lo, hi, xtol=1e-12)
