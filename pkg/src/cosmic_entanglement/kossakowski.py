"""Dipole contraction of the response tensors into the dissipator scalars.

All three coefficients are in units of the spontaneous emission rate
``Gamma = omega^3 |d|^2 / (3 pi)``, so flat space gives ``A = B = 1/4`` for
any unit dipole.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, PhysicalityError
from .response import ResponseTensors, SummationControl, cross_response

__all__ = [
    "DipolePair",
    "KossakowskiCoefficients",
    "compute_coefficients",
    "coefficients_from_response",
    "cross_coefficient",
    "kossakowski_matrix",
    "ISOTROPIC",
    "RADIAL",
    "TANGENTIAL",
    "AXIAL",
]

_NORM_TOL = 1e-12
CAUCHY_SCHWARZ_SLACK = 1e-9


def _unit_vector(v, name):
    arr = np.asarray(v)
    if np.iscomplexobj(arr):
        if np.any(arr.imag != 0):
            raise ConfigError(f"{name}: complex dipoles are not supported")
        arr = arr.real
    arr = np.asarray(arr, dtype=float)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise ConfigError(f"{name} must be a finite real 3-vector, got {v!r}")
    if abs(np.linalg.norm(arr) - 1.0) > _NORM_TOL:
        raise ConfigError(f"{name} must be a unit vector, |{name}| = {np.linalg.norm(arr)!r}")
    return arr


@dataclass(frozen=True)
class DipolePair:
    """Unit dipole orientations in the (radial, tangential, axial) frame."""

    d1: tuple
    d2: tuple

    def __post_init__(self):
        object.__setattr__(self, "d1", tuple(_unit_vector(self.d1, "d1")))
        object.__setattr__(self, "d2", tuple(_unit_vector(self.d2, "d2")))

    @classmethod
    def normalized(cls, d1, d2):
        """Build from arbitrary non-zero vectors, rescaling each to unit length."""
        out = []
        for name, v in (("d1", d1), ("d2", d2)):
            arr = np.asarray(v, dtype=float)
            norm = np.linalg.norm(arr)
            if arr.shape != (3,) or not math.isfinite(norm) or norm == 0:
                raise ConfigError(f"{name} must be a non-zero finite 3-vector, got {v!r}")
            out.append(arr / norm)
        return cls(*out)

    def swapped(self):
        return DipolePair(self.d2, self.d1)


ISOTROPIC = (1 / math.sqrt(3),) * 3
RADIAL = (1.0, 0.0, 0.0)
TANGENTIAL = (0.0, 1.0, 0.0)
AXIAL = (0.0, 0.0, 1.0)


@dataclass(frozen=True)
class KossakowskiCoefficients:
    """Self terms ``A`` (atom 1), ``B`` (atom 2) and cross term ``C``."""

    A: float
    B: float
    C: float

    def __post_init__(self):
        for name in ("A", "B", "C"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(f"{name} must be finite")

    def check(self, slack=CAUCHY_SCHWARZ_SLACK):
        """Raise :class:`PhysicalityError` if the 2x2 Kossakowski block is not PSD."""
        if self.A < -slack or self.B < -slack:
            raise PhysicalityError(f"negative self coefficient: A={self.A}, B={self.B}")
        bound = math.sqrt(max(self.A, 0.0) * max(self.B, 0.0))
        if abs(self.C) > bound + slack:
            raise PhysicalityError(
                f"|C|={abs(self.C):.3e} exceeds sqrt(AB)={bound:.3e}; "
                "the response quadrature is probably unresolved"
            )
        return self


def cross_coefficient(response, da, db):
    """``(1/4) sum_ij g_ij da_i db_j`` for the response seen from atom ``da``."""
    return 0.25 * float(np.asarray(da) @ response.g_matrix() @ np.asarray(db))


def coefficients_from_response(response: ResponseTensors, dipoles: DipolePair):
    f = np.array([response.f11, response.f22, response.f33])
    d1 = np.asarray(dipoles.d1)
    d2 = np.asarray(dipoles.d2)
    A = 0.25 * float(f @ d1**2)
    B = 0.25 * float(f @ d2**2)
    C = cross_coefficient(response, d1, d2)
    return KossakowskiCoefficients(A, B, C).check()


def compute_coefficients(geom, dipoles, ctl=None):
    """Evaluate the response for ``geom`` and contract it with ``dipoles``."""
    response = cross_response(geom, ctl or SummationControl())
    return coefficients_from_response(response, dipoles)


_STRUCTURE = np.array([[1, -1j, 0], [1j, 1, 0], [0, 0, 0]])


def kossakowski_matrix(coeff, which="self1"):
    """Structured 3x3 block ``S^(ab)`` with scalar ``coeff`` (one of A, B, C).

    ``which`` is one of ``self1``, ``self2``, ``cross``; all three share the
    same shape, the label only documents which atom pair the block couples.
    """
    if which not in ("self1", "self2", "cross"):
        raise ValueError(f"unknown Kossakowski block {which!r}")
    if not math.isfinite(coeff):
        raise ValueError("coefficient must be finite")
    return coeff * _STRUCTURE
