"""Dissipative evolution of X-shape two-atom states in the Pauli basis.

The state is ``rho = 1/4 sum_ij p_ij sigma_i (x) sigma_j``.  For an X-shape
start only ``p00 = 1`` and the five coefficients in :data:`STATE_ORDER`
are non-zero, and the dissipator keeps it that way, leaving an affine
system ``p' = M p + b`` with constant coefficients built from A, B, C.
Time is measured in units of ``1/Gamma``.

The generator is the one obtained by evaluating the Lindblad dissipator
with the structured Kossakowski blocks directly; the effective-Hamiltonian
(Lamb shift) part of the master equation is not included.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import ConfigError, PhysicalityError, SingularGeneratorError

__all__ = [
    "STATE_ORDER",
    "PauliState",
    "EvolutionSettings",
    "Trajectory",
    "werner_state",
    "generator",
    "derivative",
    "evolve",
    "state_at",
    "equilibrium",
    "x_state_eigenvalues",
]

STATE_ORDER = ("p11", "p22", "p03", "p30", "p33")

POSITIVITY_ABORT = 1e-6
_RANGE_SLACK = 1e-9


@dataclass(frozen=True)
class PauliState:
    """Live Pauli coefficients of an X-shape two-qubit state."""

    p11: float
    p22: float
    p03: float
    p30: float
    p33: float
    p00: float = 1.0

    def __post_init__(self):
        if self.p00 != 1.0:
            raise ConfigError(f"p00 is the trace coefficient and must be 1, got {self.p00}")
        values = self.as_array()
        if not np.all(np.isfinite(values)):
            raise ConfigError("Pauli coefficients must be finite")
        if np.any(np.abs(values) > 1 + _RANGE_SLACK):
            raise ConfigError(f"Pauli coefficients must lie in [-1, 1], got {values}")

    def as_array(self):
        return np.array([self.p11, self.p22, self.p03, self.p30, self.p33])

    @classmethod
    def from_array(cls, values):
        values = np.asarray(values, dtype=float)
        return cls(*(float(v) for v in values[:5]))


def werner_state(p):
    """``p |phi+><phi+| + (1 - p) I/4`` with ``phi+ = (|00> + |11>)/sqrt(2)``."""
    if not (0 <= p <= 1):
        raise ConfigError(f"Werner weight must lie in [0, 1], got {p}")
    p = float(p)
    return PauliState(p11=p, p22=-p, p03=0.0, p30=0.0, p33=p)


@dataclass(frozen=True)
class EvolutionSettings:
    t_max: float = 30.0
    dt: float = 0.005
    method: str = "exact"

    def __post_init__(self):
        if not (math.isfinite(self.t_max) and self.t_max > 0):
            raise ConfigError(f"t_max must be > 0, got {self.t_max}")
        if not (math.isfinite(self.dt) and self.dt > 0):
            raise ConfigError(f"dt must be > 0, got {self.dt}")
        if self.dt > self.t_max:
            raise ConfigError(f"dt={self.dt} exceeds t_max={self.t_max}")
        if self.method not in ("rk4", "exact"):
            raise ConfigError(f"method must be 'rk4' or 'exact', got {self.method!r}")
        if self.method == "rk4" and self.dt > 0.01:
            raise ConfigError(f"rk4 needs dt <= 0.01, got {self.dt}")

    def times(self):
        steps = int(math.floor(self.t_max / self.dt + 1e-9))
        return self.dt * np.arange(steps + 1)


@dataclass(frozen=True)
class Trajectory:
    """Samples ``coefficients[k]`` (ordered as :data:`STATE_ORDER`) at ``gamma_tau[k]``."""

    gamma_tau: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self):
        self.gamma_tau.setflags(write=False)
        self.coefficients.setflags(write=False)

    def __len__(self):
        return len(self.gamma_tau)

    def __iter__(self):
        for t, row in zip(self.gamma_tau, self.coefficients):
            yield float(t), PauliState.from_array(row)

    def concurrence(self):
        from .entanglement import concurrence_array

        return concurrence_array(self.coefficients)

    def min_eigenvalues(self):
        return x_state_eigenvalues(self.coefficients).min(axis=-1)


def generator(k):
    """Return ``(M, b)`` with ``p' = M p + b`` in :data:`STATE_ORDER`."""
    A, B, C = k.A, k.B, k.C
    s = A + B
    M = np.array([
        [-2 * s, 0.0, 2 * C, 2 * C, 4 * C],
        [0.0, -2 * s, 2 * C, 2 * C, 4 * C],
        [-2 * C, -2 * C, -4 * B, 0.0, 0.0],
        [-2 * C, -2 * C, 0.0, -4 * A, 0.0],
        [4 * C, 4 * C, -4 * A, -4 * B, -4 * s],
    ])
    b = np.array([0.0, 0.0, -4 * B, -4 * A, 0.0])
    return M, b


def derivative(state, k):
    """Rates ``dp/d(Gamma tau)`` ordered as :data:`STATE_ORDER`; ``p00' = 0``."""
    M, b = generator(k)
    return M @ state.as_array() + b


def _augmented(k):
    M, b = generator(k)
    G = np.zeros((6, 6))
    G[:5, :5] = M
    G[:5, 5] = b
    return G


def state_at(init, k, t):
    """Exact state at time ``t`` via the matrix exponential of the affine system."""
    y = np.append(init.as_array(), 1.0)
    return PauliState.from_array(expm(_augmented(k) * t) @ y)


def _exact_samples(y0, k, n_steps, dt):
    # Phi(k dt) = Phi(dt)^k exactly for a constant generator.
    step = expm(_augmented(k) * dt)
    out = np.empty((n_steps + 1, 6))
    out[0] = np.append(y0, 1.0)
    for i in range(n_steps):
        out[i + 1] = step @ out[i]
    return out[:, :5]


def _rk4_samples(y0, k, n_steps, dt):
    M, b = generator(k)
    out = np.empty((n_steps + 1, 5))
    y = out[0] = y0
    for i in range(n_steps):
        k1 = M @ y + b
        k2 = M @ (y + 0.5 * dt * k1) + b
        k3 = M @ (y + 0.5 * dt * k2) + b
        k4 = M @ (y + dt * k3) + b
        y = out[i + 1] = y + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
    return out


def evolve(init, k, settings=None):
    """Sample the evolution of ``init`` every ``dt`` up to ``t_max``.

    Raises :class:`PhysicalityError` if any sample has a density-matrix
    eigenvalue below ``-1e-6``, which means the coefficients themselves
    are inconsistent.
    """
    settings = settings or EvolutionSettings()
    times = settings.times()
    run = _exact_samples if settings.method == "exact" else _rk4_samples
    coeffs = run(init.as_array(), k, len(times) - 1, settings.dt)
    worst = x_state_eigenvalues(coeffs).min(axis=-1)
    bad = np.flatnonzero(worst < -POSITIVITY_ABORT)
    if bad.size:
        i = bad[0]
        raise PhysicalityError(
            f"density matrix eigenvalue {worst[i]:.3e} at Gamma*tau={times[i]:.4g} "
            f"for {k}; coefficients violate positivity"
        )
    return Trajectory(times, coeffs)


def equilibrium(k):
    """Fixed point of the generator; requires both self terms to be positive."""
    if not (k.A > 0 and k.B > 0):
        raise SingularGeneratorError(
            f"A={k.A}, B={k.B}: with a vanishing self term the generator has a "
            "continuum of fixed points"
        )
    M, b = generator(k)
    if np.linalg.cond(M) > 1e12:
        raise SingularGeneratorError(f"generator nearly singular for {k}")
    p = np.linalg.solve(M, -b)
    return PauliState.from_array(np.clip(p, -1.0, 1.0))


def x_state_eigenvalues(coeffs):
    """Eigenvalues of the reconstructed X-shape density matrix.

    ``coeffs`` has trailing dimension 5 in :data:`STATE_ORDER`; the result
    has trailing dimension 4.  The matrix splits into the {|00>,|11>} and
    {|01>,|10>} blocks, each a real symmetric 2x2.
    """
    c = np.asarray(coeffs, dtype=float)
    p11, p22, p03, p30, p33 = np.moveaxis(c, -1, 0)
    r00 = (1 + p33 + p03 + p30) / 4
    r11 = (1 + p33 - p03 - p30) / 4
    r01 = (1 - p33 - p03 + p30) / 4
    r10 = (1 - p33 + p03 - p30) / 4
    outer = (p11 - p22) / 4
    inner = (p11 + p22) / 4
    out = []
    for a, d, off in ((r00, r11, outer), (r01, r10, inner)):
        mean = (a + d) / 2
        rad = np.hypot((a - d) / 2, off)
        out += [mean - rad, mean + rad]
    return np.stack(out, axis=-1)
