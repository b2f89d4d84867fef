"""Concurrence of X-shape states and density-matrix reconstruction."""

import numpy as np

from .dynamics import STATE_ORDER, PauliState, x_state_eigenvalues
from .errors import PhysicalityError

__all__ = [
    "SQRT_CLAMP",
    "PAULI",
    "concurrence",
    "concurrence_array",
    "density_matrix",
    "eigenvalues",
]

SQRT_CLAMP = 1e-12

PAULI = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _clamped_sqrt(arg):
    if np.any(arg < -SQRT_CLAMP):
        raise PhysicalityError(
            f"square-root argument {np.min(arg):.3e} < -{SQRT_CLAMP:g}: state is not physical"
        )
    return np.sqrt(np.maximum(arg, 0.0))


def concurrence_array(coeffs, clip=True):
    """Vectorised concurrence over a trailing axis ordered as ``STATE_ORDER``.

    With ``c1..c5 = p11, p22, p33, p03, p30``::

        F1 = (|c1 + c2| - sqrt((1 + c3 - c4 - c5)(1 + c3 + c4 + c5))) / 2
        F2 = (|c1 - c2| - sqrt((c3 + c4 - c5 - 1)(c3 - c4 + c5 - 1))) / 2
        E  = max(0, F1, F2)

    ``clip=False`` returns ``max(F1, F2)`` instead, whose sign change marks
    sudden death and revival.
    """
    c = np.asarray(coeffs, dtype=float)
    p11, p22, p03, p30, p33 = np.moveaxis(c, -1, 0)
    f1 = 0.5 * (np.abs(p11 + p22) - _clamped_sqrt((1 + p33 - p03 - p30) * (1 + p33 + p03 + p30)))
    f2 = 0.5 * (np.abs(p11 - p22) - _clamped_sqrt((p33 + p03 - p30 - 1) * (p33 - p03 + p30 - 1)))
    margin = np.maximum(f1, f2)
    return np.maximum(0.0, margin) if clip else margin


def concurrence(state: PauliState) -> float:
    return float(concurrence_array(state.as_array()))


def density_matrix(state: PauliState):
    """``rho = 1/4 sum p_ij sigma_i (x) sigma_j`` in the {|00>,|01>,|10>,|11>} basis."""
    rho = np.kron(PAULI[0], PAULI[0]) * state.p00
    for name, value in zip(STATE_ORDER, state.as_array()):
        i, j = int(name[1]), int(name[2])
        rho = rho + value * np.kron(PAULI[i], PAULI[j])
    return rho / 4


def eigenvalues(state: PauliState):
    """Sorted eigenvalues of :func:`density_matrix` via the X-block closed form."""
    return np.sort(x_state_eigenvalues(state.as_array()))
