"""Bessel functions of the first kind for real, non-negative order.

Every response integral reduces to products of ``J_a(x)`` with ``a`` drawn
from ``|nu*n|`` and ``|nu*n| +/- 1``.  Evaluation is delegated to
``scipy.special.jv`` (AMOS), which is accurate to ~1e-15 absolute on the
range used here; this module adds the domain checks and the derivative
identities that keep every evaluated order non-negative.
"""

import numpy as np
from scipy import special

from .errors import BesselDomainError

__all__ = ["bessel_j", "bessel_j_derivative"]


def _check_order(order):
    order = np.asarray(order, dtype=float)
    if not np.all(np.isfinite(order)):
        raise BesselDomainError("Bessel order must be finite")
    if np.any(order < 0):
        raise BesselDomainError(f"negative Bessel order is not supported: {np.min(order)}")
    return order


def bessel_j(order, x):
    """Return ``J_order(x)``; broadcasts over array arguments.

    Raises :class:`BesselDomainError` for negative or non-finite order and
    for ``x < 0``.
    """
    order = _check_order(order)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise BesselDomainError("Bessel argument must be finite")
    if np.any(x < 0):
        raise BesselDomainError(f"Bessel argument must be >= 0, got {np.min(x)}")
    out = special.jv(order, x)
    return out if out.ndim else float(out)


def bessel_j_derivative(order, x):
    """Return ``dJ_order/dx`` at ``x > 0``.

    For ``order >= 1`` this is ``(J_{order-1} - J_{order+1}) / 2``.  Below
    one the lower neighbour would have negative order, so
    ``(order/x) J_order - J_{order+1}`` is used instead.
    """
    order = _check_order(order)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise BesselDomainError("derivative requires a finite argument x > 0")
    order, x = np.broadcast_arrays(order, x)
    high = order >= 1
    lower = special.jv(np.where(high, order - 1.0, order), x)
    upper = special.jv(order + 1.0, x)
    out = np.where(high, 0.5 * (lower - upper), (order / x) * lower - upper)
    return out if out.ndim else float(out)
