"""Independent reference computations used only by the tests.

None of these share code paths with the package: Bessel values come from
mpmath's series, the response integrals are done by adaptive QUADPACK on
the raw singular integrand over a fixed wide mode range, the concurrence is
Wootters' general construction, and the master-equation rates come from
applying the full 4x4 Lindblad dissipator.
"""

import mpmath
import numpy as np
from scipy import integrate, linalg, special

mpmath.mp.dps = 30

PAULI = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def mp_bessel_j(order, x):
    return float(mpmath.besselj(order, x))


def brute_response(nu, omega_r, omega_L, n_range=200):
    """(f11, f22, f33, g11, g22, g33, g13) with n in [-n_range, n_range].

    Uses ``jv`` at the literal orders, including ``J_{-1}`` at ``n = 0``,
    and ``quad`` with an algebraic weight for the ``(1 - eta)^(-1/2)``
    endpoint.
    """
    n = np.arange(-n_range, n_range + 1)
    a = np.abs(nu * n)

    def kernels(eta):
        x = omega_r * eta
        prod = np.sum(special.jv(a - 1, x) * special.jv(a + 1, x))
        shifted = np.sum(special.jv(np.abs(nu * n + 1), x) ** 2)
        axial = np.sum(special.jv(a, x) ** 2)
        mixed = np.sum(special.jv(a, x) * (special.jv(a - 1, x) - special.jv(a + 1, x)))
        return prod, shifted, axial, mixed

    def singular(component, with_cos):
        def h(eta):
            prod, shifted, axial, _ = kernels(eta)
            if component == 0:
                v = eta * (eta**2 * prod + (2 - eta**2) * shifted)
            elif component == 1:
                v = eta * (-(eta**2) * prod + (2 - eta**2) * shifted)
            else:
                v = 2 * eta**3 * axial
            if with_cos:
                v *= np.cos(omega_L * np.sqrt(1 - eta**2))
            # 1/sqrt(1-eta^2) = (1-eta)^(-1/2) * (1+eta)^(-1/2); quad owns the first factor
            return v / np.sqrt(1 + eta)

        val, _ = integrate.quad(h, 0, 1, weight="alg", wvar=(0, -0.5),
                                epsabs=1e-13, epsrel=1e-13, limit=200)
        return 0.75 * nu * val

    def g13_integrand(eta):
        *_, mixed = kernels(eta)
        return np.sin(omega_L * np.sqrt(1 - eta**2)) * eta**2 * mixed

    g13, _ = integrate.quad(g13_integrand, 0, 1, epsabs=1e-13, epsrel=1e-13, limit=200)
    out = [singular(c, False) for c in range(3)] + [singular(c, True) for c in range(3)]
    return tuple(out) + (0.75 * nu * g13,)


def wootters_concurrence(rho):
    """General two-qubit concurrence from the spin-flipped density matrix."""
    yy = np.kron(PAULI[2], PAULI[2])
    rho_tilde = yy @ rho.conj() @ yy
    root = linalg.sqrtm(rho)
    lam = np.sqrt(np.clip(np.linalg.eigvals(root @ rho_tilde @ root).real, 0, None))
    lam = np.sort(lam)[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def pauli_coefficients(rho):
    return {(i, j): float(np.trace(np.kron(PAULI[i], PAULI[j]) @ rho).real)
            for i in range(4) for j in range(4)}


def lindblad_rhs(rho, A, B, C):
    """Dissipator ``1/2 sum S_ij^(ab) [2 s_j rho s_i - s_i s_j rho - rho s_i s_j]``."""
    I2 = PAULI[0]
    ops = {1: [np.kron(s, I2) for s in PAULI[1:]], 2: [np.kron(I2, s) for s in PAULI[1:]]}
    S = np.array([[1, -1j, 0], [1j, 1, 0], [0, 0, 0]])
    coef = {(1, 1): A, (2, 2): B, (1, 2): C, (2, 1): C}
    out = np.zeros((4, 4), dtype=complex)
    for (a, b), X in coef.items():
        for i in range(3):
            for j in range(3):
                si, sj = ops[a][i], ops[b][j]
                out += 0.5 * X * S[i, j] * (2 * sj @ rho @ si - si @ sj @ rho - rho @ si @ sj)
    return out


def rho_from_coefficients(p11, p22, p03, p30, p33):
    rho = np.kron(PAULI[0], PAULI[0]).astype(complex)
    for (i, j), v in {(1, 1): p11, (2, 2): p22, (0, 3): p03, (3, 0): p30, (3, 3): p33}.items():
        rho = rho + v * np.kron(PAULI[i], PAULI[j])
    return rho / 4


def random_x_state(rng):
    """Random physical X-state: random positive 2x2 blocks in the two X sectors."""
    def block():
        m = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        h = m @ m.conj().T
        h[0, 1] = h[1, 0] = abs(h[0, 1]) * rng.choice([-1, 1])
        return h.real
    outer, inner = block(), block()
    w = rng.uniform(0.05, 0.95)
    outer *= w / np.trace(outer)
    inner *= (1 - w) / np.trace(inner)
    rho = np.zeros((4, 4))
    rho[np.ix_([0, 3], [0, 3])] = outer
    rho[np.ix_([1, 2], [1, 2])] = inner
    return rho
