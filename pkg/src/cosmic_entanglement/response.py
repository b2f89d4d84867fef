"""Fourier-transformed field correlations seen by two static atoms.

Both atoms sit at the same distance ``r`` from a cosmic string lying on the
z axis, at the same azimuth, separated by ``L`` along the string.  At the
transition frequency ``omega`` the correlation tensors reduce to
dimensionless numbers:

* ``f_ii`` -- same-point response (one atom), diagonal in the
  (radial, tangential, axial) frame;
* ``g_ij`` -- cross response between the atoms, diagonal plus an
  antisymmetric radial/axial block ``g13 = -g31``.

Each is a sum over azimuthal modes ``n`` of an integral over
``eta in [0, 1]`` whose weight ``1/sqrt(1 - eta^2)`` is removed with
``eta = sin(phi)``.  The integrals are done with Gauss-Legendre on
``phi in [0, pi/2]``, doubling the node count until two successive
estimates agree.

Closed forms exist for flat space (``nu = 1``) and for atoms on the string
(``r = 0``); they are exposed here and double as test oracles.
"""

import math
from dataclasses import dataclass, fields
from functools import lru_cache

import numpy as np

from .errors import ConfigError, ConvergenceError
from .special_functions import bessel_j

__all__ = [
    "GeometryParams",
    "SummationControl",
    "ResponseTensors",
    "same_point_response",
    "cross_response",
    "flat_space_response",
    "on_string_response",
]

# Orders this far above the largest argument contribute below ~1e-12.
_DECAY_MARGIN = 30.0
_AUTO_N_MARGIN = 40.0


@dataclass(frozen=True)
class GeometryParams:
    """Deficit-angle parameter and the two distances in units of ``1/omega``."""

    nu: float
    omega_r: float
    omega_L: float = 0.0

    def __post_init__(self):
        for name in ("nu", "omega_r", "omega_L"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ConfigError(f"{name} must be finite, got {value}")
        if self.nu < 1:
            raise ConfigError(f"nu must be >= 1, got {self.nu}")
        if self.omega_r < 0 or self.omega_L < 0:
            raise ConfigError("omega_r and omega_L must be >= 0")


@dataclass(frozen=True)
class SummationControl:
    """Truncation and quadrature budget for the mode sums.

    ``n_max`` caps ``|n|``; the working cutoff starts at
    ``ceil((omega_r + 40) / nu)`` and grows toward the cap only if the tail
    has not decayed.  ``max_quad_points`` bounds the node doubling.
    """

    n_max: int = 512
    term_tol: float = 1e-12
    quad_points: int = 32
    quad_tol: float = 1e-8
    max_quad_points: int = 4096

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 0:
            raise ConfigError(f"n_max must be a non-negative integer, got {self.n_max}")
        for name in ("term_tol", "quad_tol"):
            value = getattr(self, name)
            if not (0 < value <= 1e-3):
                raise ConfigError(f"{name} must lie in (0, 1e-3], got {value}")
        if int(self.quad_points) != self.quad_points or self.quad_points < 8:
            raise ConfigError(f"quad_points must be an integer >= 8, got {self.quad_points}")
        if self.max_quad_points < self.quad_points:
            raise ConfigError("max_quad_points must be >= quad_points")


@dataclass(frozen=True)
class ResponseTensors:
    """Dimensionless response at the transition frequency.

    The g entries are those of ``g^(12)``, atom 1 at ``z = 0`` and atom 2 at
    ``z = L``.  All off-diagonal entries except (1,3)/(3,1) vanish.
    """

    f11: float
    f22: float
    f33: float
    g11: float
    g22: float
    g33: float
    g13: float

    @property
    def g31(self):
        return -self.g13

    def f_matrix(self):
        return np.diag([self.f11, self.f22, self.f33])

    def g_matrix(self):
        g = np.diag([self.g11, self.g22, self.g33])
        g[0, 2] = self.g13
        g[2, 0] = self.g31
        return g

    def swapped(self):
        """Response with the atoms relabelled, i.e. ``g^(21)``."""
        return ResponseTensors(self.f11, self.f22, self.f33,
                               self.g11, self.g22, self.g33, -self.g13)

    def as_tuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))


# ---------------------------------------------------------------- closed forms

def _g_diag_flat(a):
    """Flat-space (g11, g33) at ``a = omega*L``, with the a -> 0 limit."""
    if a < 0.05:
        a2 = a * a
        g11 = 1 - a2 / 5 + 3 * a2**2 / 280 - a2**3 / 3780 + a2**4 / 266112
        g33 = 1 - a2 / 10 + a2**2 / 280 - a2**3 / 15120 + a2**4 / 1330560
        return g11, g33
    s, c = math.sin(a), math.cos(a)
    g11 = 3 * ((a * a - 1) * s + a * c) / (2 * a**3)
    g33 = 3 * (s - a * c) / a**3
    return g11, g33


def flat_space_response(omega_L):
    """Minkowski closed forms: ``f_ii = 1`` and the familiar dipole kernels."""
    if not (math.isfinite(omega_L) and omega_L >= 0):
        raise ConfigError(f"omega_L must be finite and >= 0, got {omega_L}")
    g11, g33 = _g_diag_flat(omega_L)
    return ResponseTensors(1.0, 1.0, 1.0, g11, g11, g33, 0.0)


def on_string_response(nu, omega_L):
    """Limit ``omega_r -> 0``: only the axial channel survives, scaled by nu."""
    if not (math.isfinite(nu) and nu >= 1):
        raise ConfigError(f"nu must be >= 1, got {nu}")
    _, g33 = _g_diag_flat(omega_L)
    if nu == 1:
        # The |nu*n +/- 1| = 0 channel still exists in flat space.
        return flat_space_response(omega_L)
    return ResponseTensors(0.0, 0.0, float(nu), 0.0, 0.0, nu * g33, 0.0)


# ------------------------------------------------------------- mode summation

@lru_cache(maxsize=16)
def _phi_rule(points):
    x, w = np.polynomial.legendre.leggauss(points)
    half = 0.25 * np.pi
    return half * (x + 1.0), half * w


def _mode_terms(geom, n, points):
    """Contribution of each mode pair {+n, -n}; shape ``(7, len(n))``.

    Rows follow the field order of :class:`ResponseTensors`.
    """
    phi, w = _phi_rule(points)
    eta = np.sin(phi)
    cos_phi = np.cos(phi)
    x = geom.omega_r * eta

    a = geom.nu * n.astype(float)[:, None]
    zero = n[:, None] == 0
    j_mid = bessel_j(a, x)
    j_up = bessel_j(a + 1.0, x)
    # J_{a-1}; at n = 0 the order would be -1, where J_{-1} = -J_1.
    j_low = np.where(zero, -j_up, bessel_j(np.maximum(a - 1.0, 0.0), x))
    pair = np.where(zero, 1.0, 2.0)

    prod = pair * j_low * j_up
    # J^2_{|nu n + 1|} summed over the pair: J^2_{a+1} + J^2_{a-1}.
    shifted = np.where(zero, j_up**2, j_up**2 + j_low**2)
    axial = pair * j_mid**2
    # J_a (J_{a-1} - J_{a+1}) = 2 J_a J'_a
    mixed = pair * j_mid * (j_low - j_up)

    eta2 = eta**2
    radial = eta * (eta2 * prod + (2.0 - eta2) * shifted)
    tangential = eta * (-eta2 * prod + (2.0 - eta2) * shifted)
    axial = eta * eta2 * axial
    cos_k = np.cos(geom.omega_L * cos_phi)
    sin_k = np.sin(geom.omega_L * cos_phi)
    # g13 has no 1/sqrt(1 - eta^2) weight, hence the extra cos(phi).
    mixed = cos_phi * sin_k * eta2 * mixed

    q = 0.75 * geom.nu
    rows = [
        q * radial @ w,
        q * tangential @ w,
        2 * q * axial @ w,
        q * (cos_k * radial) @ w,
        q * (cos_k * tangential) @ w,
        2 * q * (cos_k * axial) @ w,
        q * mixed @ w,
    ]
    return np.array(rows)


def _mode_sum(geom, ctl, points):
    nu, r = geom.nu, geom.omega_r
    n_stop_min = math.floor((r + _DECAY_MARGIN + 1.0) / nu) + 1
    n_hi = min(ctl.n_max, max(math.ceil((r + _AUTO_N_MARGIN) / nu), n_stop_min))
    while True:
        n = np.arange(n_hi + 1)
        terms = _mode_terms(geom, n, points)
        size = np.max(np.abs(terms), axis=0)
        ok = (size < ctl.term_tol) & (nu * n - 1.0 > r + _DECAY_MARGIN)
        ok[0] = False
        hits = np.flatnonzero(ok)
        if hits.size:
            return terms[:, : hits[0] + 1].sum(axis=1)
        if n_hi >= ctl.n_max:
            partial = terms.sum(axis=1)
            raise ConvergenceError(
                f"mode sum not converged at n_max={ctl.n_max} for {geom}: "
                f"last pair {size[-1]:.3e} >= term_tol {ctl.term_tol:.1e}",
                partial=ResponseTensors(*partial),
            )
        n_hi = min(ctl.n_max, 2 * n_hi)


def _response(geom, ctl):
    if geom.omega_r == 0:
        return on_string_response(geom.nu, geom.omega_L)
    points = ctl.quad_points
    prev = _mode_sum(geom, ctl, points)
    while True:
        points *= 2
        if points > ctl.max_quad_points:
            raise ConvergenceError(
                f"quadrature not converged with {points // 2} nodes for {geom}",
                partial=ResponseTensors(*prev),
            )
        cur = _mode_sum(geom, ctl, points)
        if np.max(np.abs(cur - prev)) < ctl.quad_tol:
            return ResponseTensors(*(float(v) for v in cur))
        prev = cur


def same_point_response(geom, ctl=None):
    """Return ``(f11, f22, f33)`` for an atom at distance ``omega_r``."""
    res = _response(geom, ctl or SummationControl())
    return res.f11, res.f22, res.f33


def cross_response(geom, ctl=None):
    """Return the full :class:`ResponseTensors` for the atom pair.

    Same-point and cross components share every Bessel evaluation, so both
    are always computed together.
    """
    return _response(geom, ctl or SummationControl())
